#include <array>
#include <optional>
#include <string>

#include "comax/json_io.hpp"
#include "comax/omega_generator.hpp"
#include "comax/parallel.hpp"
#include "comax/theorem2.hpp"

namespace comax {

namespace {

// Candidates look at f through a few evaluation points and the F1/F2/F3/G
// memberships used to build nu.
struct Features {
  std::array<Rational, 4> values;  // P, Index(1), Index(2), Limit
  MembershipFlags flags;
};

Features features(const OmegaFunction& f) {
  return {{f(OmegaPoint::p()), f(OmegaPoint::index(1)), f(OmegaPoint::index(2)), f(OmegaPoint::limit())},
          membership(f)};
}

enum class Gate { F1, F2, F3, G };
constexpr std::array<Gate, 4> kGates = {Gate::F1, Gate::F2, Gate::F3, Gate::G};

const char* gate_name(Gate g) {
  switch (g) {
    case Gate::F1: return "F1";
    case Gate::F2: return "F2";
    case Gate::F3: return "F3";
    case Gate::G: return "G";
  }
  return "G";
}

bool in_gate(Gate g, const MembershipFlags& m) {
  switch (g) {
    case Gate::F1: return m.inF1;
    case Gate::F2: return m.inF2;
    case Gate::F3: return m.inF3;
    case Gate::G: return m.inG;
  }
  return m.inG;
}

/// mu(f) = min over the probe set S when f is in the gate set and max over S
/// otherwise (or the reverse). Both agree on constants, so every candidate
/// is normalized by construction; the check is still run.
struct Candidate {
  unsigned mask;  // subset of the four probe points
  Gate gate;
  bool min_inside;

  Rational operator()(const Features& x) const {
    const bool use_min = in_gate(gate, x.flags) == min_inside;
    std::optional<Rational> acc;
    for (unsigned i = 0; i < 4; ++i) {
      if (!(mask & (1u << i))) continue;
      if (!acc) {
        acc = x.values[i];
      } else {
        acc = use_min ? min(*acc, x.values[i]) : max(*acc, x.values[i]);
      }
    }
    return *acc;
  }

  std::string name() const {
    static constexpr std::array<const char*, 4> kNames = {"P", "Index(1)", "Index(2)", "Limit"};
    std::string s = std::string(min_inside ? "min" : "max") + "_in_" + gate_name(gate) + "_else_" +
                    (min_inside ? "max" : "min") + "_over{";
    bool first = true;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1u << i)) {
        s += (first ? "" : ",") + std::string(kNames[i]);
        first = false;
      }
    }
    return s + "}";
  }
};

struct JoinCase {
  std::size_t f, g, joined;  // indices into the feature table
};

struct OrderCase {
  std::size_t lo, hi;
};

}  // namespace

VerificationReport problem1_exploration(const Problem1Options& options) {
  VerificationReport report;
  report.claim_id = "problem1-exploration";
  report.seed = options.seed;
  report.status = Status::Inconclusive;
  report.notes = representable_class_notes();
  report.notes.push_back("exploration only: no answer to the open question is asserted");

  // Feature table shared by every candidate; joins are computed once.
  std::vector<OmegaFunction> pool = structured_family(options.grid, options.prefix_max);
  const std::size_t family_size = pool.size();
  std::vector<JoinCase> joins;
  std::vector<OrderCase> orders;
  const auto add_function = [&](OmegaFunction f) {
    pool.push_back(std::move(f));
    return pool.size() - 1;
  };

  for (std::size_t i = 0; i < family_size; ++i) {
    for (std::size_t j = i; j < family_size; ++j) {
      if (leq(pool[i], pool[j])) orders.push_back({i, j});
      if (i != j && leq(pool[j], pool[i])) orders.push_back({j, i});
      if (i != j && comonotone_omega(pool[i], pool[j])) joins.push_back({i, j, 0});
    }
  }
  for (JoinCase& c : joins) c.joined = add_function(join(pool[c.f], pool[c.g]));
  report.counts["family_size"] = static_cast<std::int64_t>(family_size);
  report.counts["family_comonotone_pairs"] = static_cast<std::int64_t>(joins.size());
  report.counts["family_ordered_pairs"] = static_cast<std::int64_t>(orders.size());

  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const std::uint64_t seed = derive_seed(options.seed, s);
    auto [f, g] = generate_comonotone_pair(seed, options.generator);
    const OmegaFunction joined = join(f, g);
    const std::size_t a = add_function(std::move(f)), b = add_function(std::move(g));
    joins.push_back({a, b, add_function(joined)});

    auto [u, v] = generate_independent_pair(derive_seed(seed, 1), options.generator);
    const OmegaFunction lower = meet(u, v);
    const std::size_t lo = add_function(lower), hi = add_function(std::move(u));
    orders.push_back({lo, hi});
  }
  report.counts["sampled_comonotone_pairs"] = static_cast<std::int64_t>(options.samples);
  report.counts["sampled_ordered_pairs"] = static_cast<std::int64_t>(options.samples);

  std::vector<Features> table;
  table.reserve(pool.size());
  for (const OmegaFunction& f : pool) table.push_back(features(f));

  // Reference points of the search space.
  {
    const Rational half(1, 2);
    const Rational nu_half = nu_eval(make_constant(half));
    report.witnesses.push_back({{"kind", "reference"},
                                {"functional", "nu"},
                                {"verdict", "rejected: not normalized"},
                                {"constant", half.str()},
                                {"value", nu_half.str()}});
    const OmegaFunction f0 = make_f(0), f1 = make_f(1);
    report.witnesses.push_back({{"kind", "reference"},
                                {"functional", "f -> f(Limit)"},
                                {"verdict", "normalized, comonotonically maxitive and monotone: not a candidate"},
                                {"value_f0", f0(OmegaPoint::limit()).str()},
                                {"value_f1", f1(OmegaPoint::limit()).str()}});
  }

  std::vector<Candidate> candidates;
  for (unsigned mask = 1; mask < 16; ++mask) {
    for (Gate g : kGates) {
      for (bool min_inside : {true, false}) candidates.push_back({mask, g, min_inside});
    }
  }

  struct Verdict {
    bool normalized = true;
    std::optional<JoinCase> broken_join;
    std::optional<OrderCase> broken_order;
  };
  auto parts = run_sharded(candidates.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Verdict> out;
    for (std::uint64_t c = begin; c < end; ++c) {
      const Candidate& mu = candidates[c];
      Verdict v;
      for (const Rational& level : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)}) {
        if (mu(features(make_constant(level))) != level) v.normalized = false;
      }
      for (const JoinCase& j : joins) {
        if (mu(table[j.joined]) != max(mu(table[j.f]), mu(table[j.g]))) {
          v.broken_join = j;
          break;
        }
      }
      for (const OrderCase& o : orders) {
        if (mu(table[o.lo]) > mu(table[o.hi])) {
          v.broken_order = o;
          break;
        }
      }
      out.push_back(v);
    }
    return out;
  });

  std::int64_t not_normalized = 0, not_maxitive = 0, monotone = 0, found = 0;
  std::size_t c = 0;
  for (const auto& part : parts) {
    for (const Verdict& v : part) {
      const Candidate& mu = candidates[c++];
      if (!v.normalized) {
        ++not_normalized;
      } else if (v.broken_join) {
        ++not_maxitive;
      } else if (!v.broken_order) {
        ++monotone;
      } else {
        ++found;
        const OrderCase& o = *v.broken_order;
        report.witnesses.push_back({{"kind", "candidate"},
                                    {"functional", mu.name()},
                                    {"f", to_json(pool[o.lo])},
                                    {"g", to_json(pool[o.hi])},
                                    {"mu_f", mu(table[o.lo]).str()},
                                    {"mu_g", mu(table[o.hi]).str()}});
      }
    }
  }
  report.counts["candidates_total"] = static_cast<std::int64_t>(candidates.size());
  report.counts["rejected_not_normalized"] = not_normalized;
  report.counts["rejected_not_maxitive"] = not_maxitive;
  report.counts["monotone_on_tested"] = monotone;
  report.counts["candidates_found"] = found;
  report.notes.push_back(found == 0 ? "none found at this scale"
                                    : std::to_string(found) +
                                          " candidates pass every tested comonotone pair yet break monotonicity on a "
                                          "tested pair; maxitivity is only checked on the tested pairs");
  return report;
}

}  // namespace comax
