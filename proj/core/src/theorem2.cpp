#include "comax/theorem2.hpp"

#include <set>
#include <stdexcept>

#include "comax/json_io.hpp"
#include "comax/parallel.hpp"

namespace comax {

namespace {

constexpr std::size_t kMaxWitnessesPerKind = 16;

struct Checked {
  OmegaFunction f;
  MembershipFlags flags;
  Rational nu;
  Rational top;  // attained maximum
};

Checked checked(OmegaFunction f) {
  const MembershipFlags flags = membership(f);
  Rational top = attained_max(f).value;
  return {std::move(f), flags, Rational(flags.inG ? 0 : 1), std::move(top)};
}

nlohmann::json flags_json(const MembershipFlags& m) {
  return {{"inF1", m.inF1}, {"inF2", m.inF2}, {"inF3", m.inF3}, {"inG", m.inG}};
}

/// Outcome of the pair checks over one shard.
struct PairTally {
  std::int64_t family_pairs = 0;
  std::int64_t family_comonotone = 0;
  std::int64_t sampled = 0;
  std::int64_t maxitivity_checked = 0;
  std::int64_t maxitivity_violations = 0;
  std::int64_t restricted_checked = 0;
  std::int64_t restricted_violations = 0;
  std::array<std::int64_t, kAllProofBranches.size()> branches{};
  std::int64_t f2_f3_fp_ge_m = 0;  // f in F2, g in F3, f(p) >= max g
  std::int64_t f2_f3_fp_le_m = 0;  // f in F2, g in F3, f(p) <= max g
  std::vector<nlohmann::json> maxitivity_failures;
  std::vector<nlohmann::json> restricted_failures;

  void merge(PairTally&& o) {
    family_pairs += o.family_pairs;
    family_comonotone += o.family_comonotone;
    sampled += o.sampled;
    maxitivity_checked += o.maxitivity_checked;
    maxitivity_violations += o.maxitivity_violations;
    restricted_checked += o.restricted_checked;
    restricted_violations += o.restricted_violations;
    for (std::size_t b = 0; b < branches.size(); ++b) branches[b] += o.branches[b];
    f2_f3_fp_ge_m += o.f2_f3_fp_ge_m;
    f2_f3_fp_le_m += o.f2_f3_fp_le_m;
    for (auto& w : o.maxitivity_failures) {
      if (maxitivity_failures.size() < kMaxWitnessesPerKind) maxitivity_failures.push_back(std::move(w));
    }
    for (auto& w : o.restricted_failures) {
      if (restricted_failures.size() < kMaxWitnessesPerKind) restricted_failures.push_back(std::move(w));
    }
  }
};

/// Where a pair came from; rendered only when a witness is recorded.
struct Origin {
  const char* source;
  std::uint64_t i;
  std::uint64_t j;

  std::string str() const {
    return std::string(source) + "[" + std::to_string(i) + (j == i ? "" : "," + std::to_string(j)) + "]";
  }
};

nlohmann::json pair_witness(std::string kind, const Origin& origin, const Checked& a, const Checked& b) {
  return {{"kind", std::move(kind)},
          {"origin", origin.str()},
          {"f", to_json(a.f)},
          {"g", to_json(b.f)},
          {"f_membership", flags_json(a.flags)},
          {"g_membership", flags_json(b.flags)},
          {"nu_f", a.nu.str()},
          {"nu_g", b.nu.str()}};
}

/// Returns false when the pair is not comonotone (nothing else is checked).
bool check_pair(const Checked& a, const Checked& b, const Origin& origin, PairTally& tally) {
  if (!comonotone_omega(a.f, b.f)) return false;

  ++tally.maxitivity_checked;
  const BranchSet branches = proof_branches(a.flags, b.flags);
  for (std::size_t i = 0; i < branches.size(); ++i) tally.branches[i] += branches[i];
  if (branches[static_cast<std::size_t>(ProofBranch::F2AndF3)]) {
    const auto sub_case = [&](const Checked& in_f2, const Checked& in_f3) {
      if (!in_f2.flags.inF2 || !in_f3.flags.inF3) return;
      tally.f2_f3_fp_ge_m += in_f2.f.vP() >= in_f3.top;
      tally.f2_f3_fp_le_m += in_f2.f.vP() <= in_f3.top;
    };
    sub_case(a, b);
    if (!(a.f == b.f)) sub_case(b, a);
  }

  const OmegaFunction joined = join(a.f, b.f);
  const Rational nu_join = nu_eval(joined);
  if (nu_join != max(a.nu, b.nu)) {
    ++tally.maxitivity_violations;
    if (tally.maxitivity_failures.size() < kMaxWitnessesPerKind) {
      auto w = pair_witness("maxitivity_violation", origin, a, b);
      w["join"] = to_json(joined);
      w["nu_join"] = nu_join.str();
      tally.maxitivity_failures.push_back(std::move(w));
    }
  }

  // Comonotone and ordered: a maxitive functional must respect the order.
  const auto restricted = [&](const Checked& lo, const Checked& hi) {
    if (!leq(lo.f, hi.f)) return;
    ++tally.restricted_checked;
    if (lo.nu > hi.nu) {
      ++tally.restricted_violations;
      if (tally.restricted_failures.size() < kMaxWitnessesPerKind) {
        tally.restricted_failures.push_back(pair_witness("restricted_monotonicity_violation", origin, lo, hi));
      }
    }
  };
  restricted(a, b);
  if (!(a.f == b.f)) restricted(b, a);
  return true;
}

}  // namespace

std::string_view to_string(ProofBranch b) {
  switch (b) {
    case ProofBranch::BothInF2: return "both_in_F2";
    case ProofBranch::F2AndF3: return "F2_and_F3";
    case ProofBranch::BothInF3: return "both_in_F3";
    case ProofBranch::NotInF1: return "not_in_F1";
    case ProofBranch::F1MinusF2F3: return "F1_minus_F2_F3";
  }
  return "not_in_F1";
}

BranchSet proof_branches(const MembershipFlags& f, const MembershipFlags& g) {
  BranchSet s{};
  const auto set = [&](ProofBranch b) { s[static_cast<std::size_t>(b)] = true; };
  if (f.inG && g.inG) {
    if (f.inF2 && g.inF2) set(ProofBranch::BothInF2);
    if ((f.inF2 && g.inF3) || (f.inF3 && g.inF2)) set(ProofBranch::F2AndF3);
    if (f.inF3 && g.inF3) set(ProofBranch::BothInF3);
  }
  if (!f.inF1 || !g.inF1) set(ProofBranch::NotInF1);
  const auto outside_f2_f3 = [](const MembershipFlags& m) { return m.inF1 && !m.inF2 && !m.inF3; };
  if (outside_f2_f3(f) || outside_f2_f3(g)) set(ProofBranch::F1MinusF2F3);
  return s;
}

std::vector<OmegaFunction> structured_family(std::span<const Rational> grid, unsigned prefix_max) {
  for (const Rational& v : grid) require_unit(v, "family grid value");
  std::set<OmegaFunction> out;
  const std::size_t k = grid.size();
  for (unsigned n = 0; n <= prefix_max; ++n) {
    // Odometer over (vP, prefix..., value at a_{n+1}, limit value).
    std::vector<std::size_t> digit(n + 3, 0);
    const auto add = [&] {
      std::vector<Rational> prefix(n);
      for (unsigned i = 0; i < n; ++i) prefix[i] = grid[digit[1 + i]];
      const Rational& first = grid[digit[n + 1]];
      const Rational& lim = grid[digit[n + 2]];
      const Rational alpha = (lim - first) * Rational(static_cast<long>(n) + 1);
      out.insert(OmegaFunction::make(grid[digit[0]], std::move(prefix), alpha, lim - alpha));
    };
    if (k == 0) break;
    while (true) {
      add();
      std::size_t pos = digit.size();
      while (pos > 0 && ++digit[pos - 1] == k) digit[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> representable_class_notes() {
  return {"functions on X are restricted to finite prefix + affine tail; this class is closed under join and meet "
          "but does not exhaust C(X,[0,1])"};
}

VerificationReport theorem2_suite(const Theorem2Options& options) {
  VerificationReport report;
  report.claim_id = "theorem2";
  report.seed = options.seed;
  report.status = Status::Pass;
  report.notes = representable_class_notes();

  // Non-monotonicity: f_0 <= f_1 but nu(f_0) = 1 > 0 = nu(f_1).
  const Checked f0 = checked(make_f(0));
  const Checked f1 = checked(make_f(1));
  const bool ordered = leq(f0.f, f1.f);
  const bool witness_ok = ordered && f1.nu == Rational(0) && f0.nu == Rational(1);
  report.counts["nonmonotonicity_witness"] = witness_ok ? 1 : 0;
  {
    nlohmann::json w = pair_witness("non_monotone", Origin{"fixed", 0, 0}, f0, f1);
    w["f_leq_g"] = ordered;
    if (witness_ok) {
      report.witnesses.push_back(std::move(w));
    } else {
      report.fail(std::move(w));
    }
  }

  PairTally total;

  // Structured family: every unordered pair, self-pairs included.
  std::vector<Checked> family;
  for (OmegaFunction& f : structured_family(options.grid, options.prefix_max)) family.push_back(checked(std::move(f)));
  const std::uint64_t k = family.size();
  auto family_parts = run_sharded(k, options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    PairTally t;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::uint64_t j = i; j < k; ++j) {
        ++t.family_pairs;
        if (check_pair(family[i], family[j], Origin{"family", i, j}, t)) ++t.family_comonotone;
      }
    }
    return t;
  });
  for (auto& p : family_parts) total.merge(std::move(p));

  // Generated comonotone pairs, one independent stream per sample index.
  auto sample_parts = run_sharded(options.samples, options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    PairTally t;
    for (std::uint64_t s = begin; s < end; ++s) {
      auto [f, g] = generate_comonotone_pair(derive_seed(options.seed, s), options.generator);
      ++t.sampled;
      if (!check_pair(checked(std::move(f)), checked(std::move(g)), Origin{"sample", s, s}, t)) {
        throw std::logic_error("generator produced a non-comonotone pair at sample " + std::to_string(s));
      }
    }
    return t;
  });
  for (auto& p : sample_parts) total.merge(std::move(p));
  report.counts["family_size"] = static_cast<std::int64_t>(k);
  report.counts["family_pairs"] = total.family_pairs;
  report.counts["family_comonotone_pairs"] = total.family_comonotone;
  report.counts["sampled_pairs"] = total.sampled;
  report.counts["maxitivity_checked"] = total.maxitivity_checked;
  report.counts["maxitivity_violations"] = total.maxitivity_violations;
  report.counts["restricted_monotone_checked"] = total.restricted_checked;
  report.counts["restricted_monotone_violations"] = total.restricted_violations;
  for (ProofBranch b : kAllProofBranches) {
    report.counts["branch_" + std::string(to_string(b))] = total.branches[static_cast<std::size_t>(b)];
  }
  report.counts["branch_F2_and_F3_fp_ge_m"] = total.f2_f3_fp_ge_m;
  report.counts["branch_F2_and_F3_fp_le_m"] = total.f2_f3_fp_le_m;
  for (auto& w : total.maxitivity_failures) report.fail(std::move(w));
  for (auto& w : total.restricted_failures) report.fail(std::move(w));
  for (ProofBranch b : kAllProofBranches) {
    if (report.count("branch_" + std::string(to_string(b))) == 0) {
      report.fail({{"kind", "branch_not_exercised"}, {"branch", std::string(to_string(b))}});
    }
  }
  return report;
}

}  // namespace comax
