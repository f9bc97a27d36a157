#include "comax/tnorm.hpp"

#include <cstddef>

namespace comax {

namespace {

constexpr std::int64_t kWitnessesPerAxiom = 2;

nlohmann::json tuple_json(std::string_view axiom, std::initializer_list<const Rational*> values) {
  nlohmann::json args = nlohmann::json::array();
  for (const Rational* v : values) args.push_back(v->str());
  return {{"axiom", std::string(axiom)}, {"args", args}};
}

}  // namespace

std::string_view to_string(TNormKind kind) {
  switch (kind) {
    case TNormKind::Minimum: return "minimum";
    case TNormKind::Product: return "product";
    case TNormKind::Lukasiewicz: return "lukasiewicz";
  }
  return "minimum";
}

TNormKind tnorm_from_string(std::string_view name) {
  for (TNormKind k : kAllTNorms) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown t-norm \"" + std::string(name) + "\"");
}

Rational TNorm::apply(const Rational& s, const Rational& t) const {
  require_unit(s, "t-norm argument");
  require_unit(t, "t-norm argument");
  switch (kind_) {
    case TNormKind::Minimum: return min(s, t);
    case TNormKind::Product: return s * t;
    case TNormKind::Lukasiewicz: return max(Rational(0), s + t - Rational(1));
  }
  return min(s, t);
}

Rational tnorm_apply(TNorm norm, const Rational& s, const Rational& t) { return norm.apply(s, t); }

VerificationReport check_operation_axioms(std::string_view name, const BinaryOperation& op,
                                          std::span<const Rational> grid) {
  for (const Rational& g : grid) require_unit(g, "grid value");

  VerificationReport report;
  report.claim_id = "tnorm-axioms/" + std::string(name);
  report.status = Status::Pass;
  for (const char* axiom : {"commutativity", "unit", "monotonicity", "associativity"}) {
    report.counts[std::string("violations_") + axiom] = 0;
  }

  const auto violation = [&](std::string_view axiom, std::initializer_list<const Rational*> values) {
    report.add_count("violations_" + std::string(axiom));
    report.add_count("violations");
    report.status = Status::Fail;
    if (report.count("violations_" + std::string(axiom)) <= kWitnessesPerAxiom) {
      report.witnesses.push_back(tuple_json(axiom, values));
    }
  };
  report.counts["violations"] = 0;

  const std::size_t m = grid.size();
  const Rational one(1);

  // Pairwise tables keep the triple loops cheap.
  std::vector<Rational> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = op(grid[i], grid[j]);
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (op(grid[i], one) != grid[i]) violation("unit", {&grid[i]});
    for (std::size_t j = 0; j < m; ++j) {
      report.add_count("pairs_checked");
      if (table[i * m + j] != table[j * m + i]) violation("commutativity", {&grid[i], &grid[j]});
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& st = table[i * m + j];
      for (std::size_t k = 0; k < m; ++k) {
        report.add_count("triples_checked");
        // monotone in the first argument: s <= s' implies s*t <= s'*t
        if (grid[i] <= grid[j] && table[i * m + k] > table[j * m + k]) {
          violation("monotonicity", {&grid[i], &grid[j], &grid[k]});
        }
        const Rational lhs = op(st, grid[k]);
        const Rational rhs = op(grid[i], table[j * m + k]);
        if (lhs != rhs) violation("associativity", {&grid[i], &grid[j], &grid[k]});
      }
    }
  }
  return report;
}

VerificationReport check_tnorm_axioms(TNorm norm, std::span<const Rational> grid) {
  return check_operation_axioms(norm.name(), [norm](const Rational& s, const Rational& t) { return norm.apply(s, t); },
                                grid);
}

}  // namespace comax
