#include "comax/census.hpp"

#include <optional>

#include "comax/json_io.hpp"
#include "comax/parallel.hpp"

namespace comax {

BudgetExceeded::BudgetExceeded(mpz_class required, std::uint64_t budget)
    : DomainError("enumeration needs " + required.get_str() + " functionals, budget is " + std::to_string(budget)),
      required_(std::move(required)),
      budget_(budget) {}

mpz_class functional_count(const GridChain& chain, std::size_t n) {
  mpz_class domain;
  mpz_ui_pow_ui(domain.get_mpz_t(), chain.size(), n);
  if (!domain.fits_ulong_p()) throw DomainError("functional domain too large to count");
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), chain.size(), domain.get_ui());
  return count;
}

std::uint64_t checked_functional_count(const GridChain& chain, std::size_t n, std::uint64_t budget) {
  mpz_class domain;
  mpz_ui_pow_ui(domain.get_mpz_t(), chain.size(), n);
  if (domain > 65536) {
    throw DomainError("enumeration over " + domain.get_str() + " grid functions is beyond any budget");
  }
  mpz_class count = functional_count(chain, n);
  if (count > mpz_class(std::to_string(budget))) throw BudgetExceeded(std::move(count), budget);
  return std::stoull(count.get_str());
}

namespace {

void check_chain_width(const GridChain& chain) {
  if (chain.size() > 255) throw DomainError("tabulated functionals support chains of at most 255 values");
}

/// Writes the digits of `ordinal` into table (most significant first).
void decode_ordinal(std::uint64_t ordinal, std::size_t base, std::vector<std::uint8_t>& table) {
  for (std::size_t c = table.size(); c-- > 0;) {
    table[c] = static_cast<std::uint8_t>(ordinal % base);
    ordinal /= base;
  }
}

/// Odometer increment; returns false on wrap-around.
bool advance(std::vector<std::uint8_t>& table, std::size_t base) {
  for (std::size_t c = table.size(); c-- > 0;) {
    if (++table[c] < base) return true;
    table[c] = 0;
  }
  return false;
}

struct JoinPair {
  std::uint32_t a, b, joined;
};

struct OrderPair {
  std::uint32_t lo, hi;
  bool comonotone;
};

struct FoundWitness {
  std::uint64_t ordinal;
  std::vector<std::uint8_t> table;
  std::uint32_t a, b;
};

struct CensusPartial {
  std::int64_t total = 0;
  std::int64_t maxitive = 0;
  std::int64_t monotone = 0;
  std::int64_t both = 0;
  std::int64_t maxitive_not_monotone = 0;
  std::int64_t monotone_not_maxitive = 0;
  std::int64_t restricted_violations = 0;
  std::optional<FoundWitness> first_maxitive_not_monotone;
  std::optional<FoundWitness> first_monotone_not_maxitive;
  std::optional<FoundWitness> first_restricted_violation;
};

void keep_first(std::optional<FoundWitness>& slot, const std::optional<FoundWitness>& candidate) {
  if (candidate && (!slot || candidate->ordinal < slot->ordinal)) slot = candidate;
}

}  // namespace

void enumerate_functionals(const GridChain& chain, std::size_t n, std::uint64_t budget,
                           const std::function<void(std::uint64_t, const TabulatedFunctional&)>& visit,
                           std::uint64_t first, std::uint64_t last) {
  check_chain_width(chain);
  const std::uint64_t total = checked_functional_count(chain, n, budget);
  last = std::min(last, total);
  if (first >= last) return;

  TabulatedFunctional F{chain, n, std::vector<std::uint8_t>(function_count(chain, n))};
  decode_ordinal(first, chain.size(), F.table);
  for (std::uint64_t ord = first; ord < last; ++ord) {
    visit(ord, F);
    advance(F.table, chain.size());
  }
}

VerificationReport theorem1_census(const GridChain& chain, std::size_t n, const CensusOptions& options) {
  check_chain_width(chain);
  const std::uint64_t total = checked_functional_count(chain, n, options.budget);

  const auto fs = all_functions(chain, n);
  std::vector<JoinPair> comonotone_pairs;
  std::vector<OrderPair> ordered_pairs;
  for (std::uint32_t i = 0; i < fs.size(); ++i) {
    for (std::uint32_t j = 0; j < fs.size(); ++j) {
      if (i == j) continue;
      const bool como = comonotone_finite(fs[i], fs[j]);
      if (i < j && como) {
        comonotone_pairs.push_back({i, j, static_cast<std::uint32_t>(function_code(chain, join_finite(fs[i], fs[j])))});
      }
      if (fs[i].leq(fs[j])) ordered_pairs.push_back({i, j, como});
    }
  }

  const std::size_t base = chain.size();
  const std::size_t domain = fs.size();
  auto partials = run_sharded(total, options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    CensusPartial p;
    if (begin >= end) return p;
    std::vector<std::uint8_t> t(domain);
    decode_ordinal(begin, base, t);
    for (std::uint64_t ord = begin; ord < end; ++ord, advance(t, base)) {
      ++p.total;
      const JoinPair* broken_join = nullptr;
      for (const JoinPair& q : comonotone_pairs) {
        if (t[q.joined] != std::max(t[q.a], t[q.b])) {
          broken_join = &q;
          break;
        }
      }
      const OrderPair* broken_order = nullptr;
      const OrderPair* broken_restricted = nullptr;
      for (const OrderPair& q : ordered_pairs) {
        if (t[q.lo] > t[q.hi]) {
          if (!broken_order) broken_order = &q;
          if (q.comonotone && !broken_restricted) broken_restricted = &q;
        }
      }
      const bool maxitive = broken_join == nullptr;
      const bool monotone = broken_order == nullptr;
      p.maxitive += maxitive;
      p.monotone += monotone;
      p.both += maxitive && monotone;
      if (maxitive && !monotone) {
        ++p.maxitive_not_monotone;
        keep_first(p.first_maxitive_not_monotone, FoundWitness{ord, t, broken_order->lo, broken_order->hi});
      }
      if (monotone && !maxitive) {
        ++p.monotone_not_maxitive;
        keep_first(p.first_monotone_not_maxitive, FoundWitness{ord, t, broken_join->a, broken_join->b});
      }
      // A comonotone ordered pair has f v g = g, so maxitivity forces F(f) <= F(g).
      if (maxitive && broken_restricted) {
        ++p.restricted_violations;
        keep_first(p.first_restricted_violation, FoundWitness{ord, t, broken_restricted->lo, broken_restricted->hi});
      }
    }
    return p;
  });

  CensusPartial sum;
  for (const CensusPartial& p : partials) {
    sum.total += p.total;
    sum.maxitive += p.maxitive;
    sum.monotone += p.monotone;
    sum.both += p.both;
    sum.maxitive_not_monotone += p.maxitive_not_monotone;
    sum.monotone_not_maxitive += p.monotone_not_maxitive;
    sum.restricted_violations += p.restricted_violations;
    keep_first(sum.first_maxitive_not_monotone, p.first_maxitive_not_monotone);
    keep_first(sum.first_monotone_not_maxitive, p.first_monotone_not_maxitive);
    keep_first(sum.first_restricted_violation, p.first_restricted_violation);
  }

  VerificationReport report;
  report.claim_id = "finite-census";
  report.counts = {
      {"total", sum.total},
      {"comonotonically_maxitive", sum.maxitive},
      {"monotone", sum.monotone},
      {"maxitive_and_monotone", sum.both},
      {"maxitive_not_monotone", sum.maxitive_not_monotone},
      {"monotone_not_maxitive", sum.monotone_not_maxitive},
      {"restricted_monotonicity_violations", sum.restricted_violations},
      {"grid_functions", static_cast<std::int64_t>(domain)},
      {"comonotone_pairs", static_cast<std::int64_t>(comonotone_pairs.size())},
      {"ordered_pairs", static_cast<std::int64_t>(ordered_pairs.size())},
      {"chain_size", static_cast<std::int64_t>(base)},
      {"n", static_cast<std::int64_t>(n)},
  };

  const auto describe = [&](std::string kind, const FoundWitness& w) {
    nlohmann::json table = nlohmann::json::array();
    for (std::uint8_t v : w.table) table.push_back(chain[v].str());
    const GridFunction joined = join_finite(fs[w.a], fs[w.b]);
    const auto value = [&](const GridFunction& f) { return chain[w.table[function_code(chain, f)]].str(); };
    return nlohmann::json{{"kind", std::move(kind)},
                          {"ordinal", w.ordinal},
                          {"table", table},
                          {"f", to_json(fs[w.a])},
                          {"g", to_json(fs[w.b])},
                          {"F(f)", value(fs[w.a])},
                          {"F(g)", value(fs[w.b])},
                          {"F(f v g)", value(joined)}};
  };

  report.status = Status::Pass;
  if (sum.first_monotone_not_maxitive) {
    report.witnesses.push_back(describe("monotone_not_comonotonically_maxitive", *sum.first_monotone_not_maxitive));
  } else {
    report.notes.push_back("no monotone functional fails comonotonic maxitivity at this scale");
  }
  if (sum.first_maxitive_not_monotone) {
    report.status = Status::Finding;
    report.witnesses.push_back(describe("comonotonically_maxitive_not_monotone", *sum.first_maxitive_not_monotone));
    report.notes.push_back("comonotonically maxitive functionals that are not monotone exist on this grid");
  } else {
    report.notes.push_back("every comonotonically maxitive functional on this grid is monotone");
  }
  if (sum.first_restricted_violation) {
    report.fail(describe("restricted_monotonicity_violation", *sum.first_restricted_violation));
  }
  return report;
}

}  // namespace comax
