#include <gtest/gtest.h>

#include <set>

#include "comax/json_io.hpp"
#include "comax/report.hpp"

namespace comax {
namespace {

using nlohmann::json;

std::string diagnostics_of(const json& j, OmegaFunction (*parse)(const json&)) {
  try {
    parse(j);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(JsonIo, OmegaRoundTrip) {
  const auto f = OmegaFunction::make(Rational(1, 2), {Rational(0), Rational(1, 2)}, 0, Rational(1, 2));
  const json j = to_json(f);
  EXPECT_EQ(j.at("vLim"), "1/2");
  EXPECT_EQ(parse_omega_function(j), f);
}

TEST(JsonIo, AcceptsFOneAsCanonical) {
  const json j = {{"vP", "1"}, {"prefix", {"0", "1/2"}}, {"alpha", "1"}, {"beta", "0"}};
  const auto f = parse_omega_function(j);
  EXPECT_EQ(f.prefix_length(), 0u);
  EXPECT_EQ(f, make_f(1));
}

TEST(JsonIo, RejectsValueOutsideUnitInterval) {
  const json j = {{"vP", "3/2"}, {"prefix", json::array()}, {"alpha", "0"}, {"beta", "0"}};
  try {
    parse_omega_function(j);
    FAIL();
  } catch (const InputError& e) {
    ASSERT_EQ(e.diagnostics().size(), 1u);
    EXPECT_EQ(e.diagnostics()[0].path, "/vP");
    EXPECT_NE(e.diagnostics()[0].message.find("outside [0,1]"), std::string::npos);
  }
}

TEST(JsonIo, ReportsEveryProblem) {
  const json j = {{"vP", 5}, {"prefix", {"1/2", "2/0"}}, {"beta", "0"}};
  try {
    parse_omega_function(j);
    FAIL();
  } catch (const InputError& e) {
    std::set<std::string> paths;
    for (const auto& d : e.diagnostics()) paths.insert(d.path);
    EXPECT_EQ(paths, (std::set<std::string>{"/vP", "/prefix/1", "/alpha"}));
  }
}

TEST(JsonIo, RejectsInconsistentLimit) {
  const json j = {{"vP", "0"}, {"prefix", json::array()}, {"alpha", "1"}, {"beta", "0"}, {"vLim", "1/2"}};
  EXPECT_NE(diagnostics_of(j, parse_omega_function).find("continuity violation"), std::string::npos);
  const json bad_tail = {{"vP", "0"}, {"prefix", json::array()}, {"alpha", "2"}, {"beta", "-1"}};
  EXPECT_FALSE(diagnostics_of(bad_tail, parse_omega_function).empty());
}

TEST(JsonIo, CapacityValidation) {
  const json good = {{"n", 2}, {"mu", {{"", "0"}, {"0", "1/2"}, {"1", "1/2"}, {"01", "1"}}}};
  const auto cap = parse_capacity(good);
  EXPECT_EQ(cap(0b01), Rational(1, 2));
  EXPECT_EQ(to_json(cap), good);

  const json non_monotone = {{"n", 2}, {"mu", {{"", "0"}, {"0", "1"}, {"1", "0"}, {"01", "1/2"}}}};
  try {
    parse_capacity(non_monotone);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("monotonicity violation"), std::string::npos);
  }
  const json missing = {{"n", 2}, {"mu", {{"", "0"}, {"01", "1"}}}};
  EXPECT_THROW(parse_capacity(missing), InputError);
  const json bad_key = {{"n", 2}, {"mu", {{"", "0"}, {"0", "0"}, {"1", "0"}, {"10", "1"}}}};
  EXPECT_THROW(parse_capacity(bad_key), InputError);
}

TEST(JsonIo, GridFunction) {
  EXPECT_EQ(parse_grid_function({{"values", {"1/4", "2/4"}}}),
            GridFunction(std::vector<Rational>{Rational(1, 4), Rational(1, 2)}));
  EXPECT_THROW(parse_grid_function({{"values", {"5/4"}}}), InputError);
  EXPECT_THROW(parse_grid_function(json::array()), InputError);
}

TEST(JsonIo, RationalList) {
  const auto v = parse_rational_list("0, 1/2,1");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], Rational(1, 2));
  EXPECT_THROW(parse_rational_list("0,,1"), DomainError);
}

TEST(Report, SerializationIsSortedAndRoundTrips) {
  VerificationReport r;
  r.claim_id = "demo";
  r.status = Status::Finding;
  r.add_count("zeta", 2);
  r.add_count("alpha");
  r.witnesses.push_back({{"b", 1}, {"a", 2}});
  r.notes.push_back("note");
  r.seed = 42;
  const std::string text = r.serialize();
  EXPECT_EQ(text.back(), '\n');
  EXPECT_LT(text.find("\"alpha\""), text.find("\"zeta\""));
  EXPECT_LT(text.find("\"claim_id\""), text.find("\"status\""));
  const auto back = VerificationReport::from_json(json::parse(text));
  EXPECT_EQ(back.serialize(), text);
  EXPECT_EQ(back.status, Status::Finding);
  EXPECT_EQ(back.count("zeta"), 2);
  EXPECT_EQ(back.count("missing"), 0);
}

TEST(Report, FailRecordsWitness) {
  VerificationReport r;
  r.status = Status::Pass;
  r.fail({{"kind", "x"}});
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(r.witnesses.size(), 1u);
  for (Status s : {Status::Pass, Status::Fail, Status::Finding, Status::Inconclusive}) {
    EXPECT_EQ(status_from_string(to_string(s)), s);
  }
}

}  // namespace
}  // namespace comax
