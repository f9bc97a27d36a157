#include "comax/report.hpp"

#include <stdexcept>

namespace comax {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Finding: return "finding";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "finding") return Status::Finding;
  if (s == "inconclusive") return Status::Inconclusive;
  throw std::invalid_argument("unknown report status \"" + std::string(s) + "\"");
}

std::int64_t VerificationReport::count(const std::string& key) const {
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

void VerificationReport::fail(nlohmann::json witness) {
  status = Status::Fail;
  witnesses.push_back(std::move(witness));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["claim_id"] = claim_id;
  j["status"] = std::string(to_string(status));
  j["counts"] = counts;
  j["witnesses"] = witnesses;
  j["notes"] = notes;
  j["seed"] = seed;
  j["config_echo"] = config_echo;
  return j;
}

std::string VerificationReport::serialize() const {
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  return to_json().dump(2) + "\n";
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.counts = j.at("counts").get<std::map<std::string, std::int64_t>>();
  r.witnesses = j.at("witnesses").get<std::vector<nlohmann::json>>();
  r.notes = j.value("notes", std::vector<std::string>{});
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config_echo = j.value("config_echo", nlohmann::json::object());
  return r;
}

}  // namespace comax
