#include "comax/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "comax/census.hpp"
#include "comax/finite_lab.hpp"
#include "comax/json_io.hpp"
#include "comax/omega.hpp"
#include "comax/parallel.hpp"
#include "comax/theorem2.hpp"
#include "comax/tnorm.hpp"

namespace comax::cli {

namespace {

nlohmann::json grid_json(const std::vector<Rational>& grid) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& r : grid) out.push_back(r.str());
  return out;
}

VerificationReport verify_counterexample(const SuiteConfig& config) {
  Theorem2Options opt;
  opt.seed = config.seed;
  opt.samples = config.samples;
  opt.prefix_max = config.prefix_max;
  opt.grid = config.grid;
  opt.jobs = config.jobs;
  return theorem2_suite(opt);
}

VerificationReport finite_census(const SuiteConfig& config) {
  return theorem1_census(GridChain(config.grid), config.n, {config.budget, config.jobs});
}

/// Counters for one norm over every capacity.
struct IntegralTally {
  std::int64_t capacities = 0;
  std::int64_t normalized_failures = 0;
  std::int64_t maxitive_failures = 0;
  std::int64_t homogeneous_failures = 0;
  std::int64_t monotone_failures = 0;
  std::vector<nlohmann::json> witnesses;
};

VerificationReport integral_properties(const SuiteConfig& config) {
  const GridChain chain(config.grid);
  const std::size_t n = config.n;
  const std::vector<Capacity> caps = enumerate_capacities(chain, n);

  VerificationReport report;
  report.claim_id = "integral-properties";
  report.seed = config.seed;
  report.status = Status::Pass;
  report.counts["capacities"] = static_cast<std::int64_t>(caps.size());

  for (TNormKind kind : kAllTNorms) {
    const TNorm norm(kind);
    const std::string prefix = std::string(norm.name()) + ".";
    if (!chain.closed_under(norm)) {
      report.notes.push_back(prefix + "homogeneity: grid not closed under the norm, rational samples added");
    }

    auto parts = run_sharded(caps.size(), config.jobs, [&](std::uint64_t begin, std::uint64_t end) {
      IntegralTally t;
      for (std::uint64_t i = begin; i < end; ++i) {
        const Functional F = make_integral_functional(caps[i], norm);
        ++t.capacities;
        const auto record = [&](const char* property, nlohmann::json detail) {
          t.witnesses.push_back({{"norm", std::string(norm.name())},
                                 {"property", property},
                                 {"capacity", to_json(caps[i])},
                                 {"detail", std::move(detail)}});
        };
        if (!is_normalized(F, chain, n)) {
          ++t.normalized_failures;
          record("normalized", nullptr);
        }
        if (const auto r = is_comonotonically_maxitive(F, chain, n); !r) {
          ++t.maxitive_failures;
          record("comonotonically_maxitive", {to_json(r.witness->first), to_json(r.witness->second)});
        }
        const HomogeneitySampling sampling{derive_seed(config.seed, i), 64, 12};
        if (const auto r = is_star_homogeneous(F, norm, chain, n, sampling); !r) {
          ++t.homogeneous_failures;
          record("star_homogeneous", {{"c", r.witness->c.str()}, {"phi", to_json(r.witness->phi)}});
        }
        if (const auto r = is_monotone(F, chain, n); !r) {
          ++t.monotone_failures;
          record("monotone", {to_json(r.witness->first), to_json(r.witness->second)});
        }
      }
      return t;
    });

    IntegralTally sum;
    for (auto& p : parts) {
      sum.capacities += p.capacities;
      sum.normalized_failures += p.normalized_failures;
      sum.maxitive_failures += p.maxitive_failures;
      sum.homogeneous_failures += p.homogeneous_failures;
      sum.monotone_failures += p.monotone_failures;
      for (auto& w : p.witnesses) {
        if (sum.witnesses.size() < 16) sum.witnesses.push_back(std::move(w));
      }
    }
    report.counts[prefix + "checked"] = sum.capacities;
    report.counts[prefix + "normalized_failures"] = sum.normalized_failures;
    report.counts[prefix + "comonotonically_maxitive_failures"] = sum.maxitive_failures;
    report.counts[prefix + "star_homogeneous_failures"] = sum.homogeneous_failures;
    report.counts[prefix + "monotone_failures"] = sum.monotone_failures;
    for (auto& w : sum.witnesses) report.fail(std::move(w));
  }
  return report;
}

VerificationReport tnorm_axioms(const SuiteConfig& config) {
  VerificationReport report;
  report.claim_id = "tnorm-axioms";
  report.seed = config.seed;
  report.status = Status::Pass;
  for (TNormKind kind : kAllTNorms) {
    const VerificationReport r = check_tnorm_axioms(TNorm(kind), config.grid);
    const std::string prefix = std::string(to_string(kind)) + ".";
    for (const auto& [k, v] : r.counts) report.counts[prefix + k] = v;
    for (const auto& w : r.witnesses) {
      nlohmann::json tagged = w;
      tagged["norm"] = std::string(to_string(kind));
      report.witnesses.push_back(std::move(tagged));
    }
    if (r.status == Status::Fail) report.status = Status::Fail;
  }
  return report;
}

/// Loaded input file: exactly one of the two kinds.
struct LoadedFunction {
  std::string path;
  std::optional<OmegaFunction> omega;
  std::optional<GridFunction> grid;
};

LoadedFunction load_function(const std::string& path) {
  const nlohmann::json j = read_json_file(path);
  LoadedFunction out{path, std::nullopt, std::nullopt};
  try {
    if (j.is_object() && j.contains("values")) {
      out.grid = parse_grid_function(j);
    } else {
      out.omega = parse_omega_function(j);
    }
  } catch (const InputError& e) {
    std::vector<Diagnostic> ds = e.diagnostics();
    for (auto& d : ds) d.path = path + ":" + (d.path.empty() ? "/" : d.path);
    throw InputError(std::move(ds));
  }
  return out;
}

VerificationReport comonotone_check(const SuiteConfig& config) {
  if (config.inputs.size() < 2) throw InputError("", "comonotone-check needs at least two input files");
  std::vector<LoadedFunction> fs;
  for (const std::string& path : config.inputs) fs.push_back(load_function(path));
  const bool omega = fs.front().omega.has_value();
  for (const auto& f : fs) {
    if (f.omega.has_value() != omega) throw InputError("", "inputs mix functions on X with grid functions");
  }

  VerificationReport report;
  report.claim_id = "comonotone-check";
  report.seed = config.seed;
  report.status = Status::Pass;
  if (omega) report.notes = representable_class_notes();
  std::int64_t checked = 0, comonotone = 0;

  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      ++checked;
      nlohmann::json w = {{"f", fs[i].path}, {"g", fs[j].path}};
      if (omega) {
        const OmegaFunction& f = *fs[i].omega;
        const OmegaFunction& g = *fs[j].omega;
        const ComonotoneResult r = comonotone_omega(f, g);
        if (r) {
          ++comonotone;
          continue;
        }
        const auto& [x1, x2] = *r.witness;
        w["comonotone"] = false;
        w["witness"] = {x1.str(), x2.str()};
        w["product"] = ((f(x1) - f(x2)) * (g(x1) - g(x2))).str();
      } else {
        const GridFunction& f = *fs[i].grid;
        const GridFunction& g = *fs[j].grid;
        if (f.size() != g.size()) throw InputError("", fs[i].path + " and " + fs[j].path + " differ in length");
        if (comonotone_finite(f, g)) {
          ++comonotone;
          continue;
        }
        w["comonotone"] = false;
        for (std::size_t a = 0; a < f.size(); ++a) {
          for (std::size_t b = a + 1; b < f.size() && !w.contains("witness"); ++b) {
            const Rational prod = (f[a] - f[b]) * (g[a] - g[b]);
            if (prod.sign() < 0) {
              w["witness"] = {a, b};
              w["product"] = prod.str();
            }
          }
        }
      }
      report.status = Status::Finding;
      report.witnesses.push_back(std::move(w));
    }
  }
  report.counts["pairs_checked"] = checked;
  report.counts["comonotone_pairs"] = comonotone;
  report.counts["non_comonotone_pairs"] = checked - comonotone;
  return report;
}

VerificationReport explore_problem1(const SuiteConfig& config) {
  Problem1Options opt;
  opt.seed = config.seed;
  opt.samples = config.samples;
  opt.prefix_max = config.prefix_max;
  opt.grid = config.grid;
  opt.jobs = config.jobs;
  return problem1_exploration(opt);
}

VerificationReport validate_inputs(const SuiteConfig& config) {
  if (config.inputs.empty()) throw InputError("", "validate needs at least one input file");
  VerificationReport report;
  report.claim_id = "validate";
  report.seed = config.seed;
  report.status = Status::Pass;
  for (const std::string& path : config.inputs) {
    const nlohmann::json j = read_json_file(path);
    nlohmann::json w = {{"file", path}};
    try {
      if (j.is_object() && j.contains("mu")) {
        w["kind"] = "capacity";
        w["canonical"] = to_json(parse_capacity(j));
      } else if (j.is_object() && j.contains("values")) {
        w["kind"] = "grid_function";
        w["canonical"] = to_json(parse_grid_function(j));
      } else {
        w["kind"] = "omega_function";
        const OmegaFunction f = parse_omega_function(j);
        w["canonical"] = to_json(f);
        w["prefix_length"] = f.prefix_length();
      }
    } catch (const InputError& e) {
      std::vector<Diagnostic> ds = e.diagnostics();
      for (auto& d : ds) d.path = path + ":" + (d.path.empty() ? "/" : d.path);
      throw InputError(std::move(ds));
    }
    report.witnesses.push_back(std::move(w));
    report.add_count("valid_inputs");
  }
  return report;
}

void check_config(const SuiteConfig& config) {
  std::vector<Diagnostic> ds;
  try {
    GridChain chain(config.grid);
  } catch (const DomainError& e) {
    ds.push_back({"--grid", e.what()});
  }
  if (config.samples == 0) ds.push_back({"--samples", "must be positive"});
  if (config.prefix_max == 0) ds.push_back({"--prefix-max", "must be positive"});
  if (config.n == 0) ds.push_back({"--n", "must be positive"});
  if (config.budget == 0) ds.push_back({"--budget", "must be at least 1"});
  if (config.jobs == 0) ds.push_back({"--jobs", "must be positive"});
  if (!ds.empty()) throw InputError(std::move(ds));
}

}  // namespace

nlohmann::json config_echo(const SuiteConfig& config) {
  return {{"seed", config.seed},         {"samples", config.samples}, {"prefix_max", config.prefix_max},
          {"grid", grid_json(config.grid)}, {"n", config.n},          {"budget", config.budget},
          {"inputs", config.inputs}};
}

RunOutcome run(std::string_view subcommand, const SuiteConfig& config) {
  RunOutcome out;
  try {
    check_config(config);
    VerificationReport report;
    if (subcommand == "verify-counterexample") {
      report = verify_counterexample(config);
    } else if (subcommand == "finite-census") {
      report = finite_census(config);
    } else if (subcommand == "integral-properties") {
      report = integral_properties(config);
    } else if (subcommand == "tnorm-axioms") {
      report = tnorm_axioms(config);
    } else if (subcommand == "comonotone-check") {
      report = comonotone_check(config);
    } else if (subcommand == "explore-problem1") {
      report = explore_problem1(config);
    } else if (subcommand == "validate") {
      report = validate_inputs(config);
    } else {
      out.exit_code = kExitBadInput;
      out.diagnostics.push_back("unknown subcommand \"" + std::string(subcommand) + "\"");
      return out;
    }
    report.seed = config.seed;
    report.config_echo = config_echo(config);
    out.exit_code = report.status == Status::Fail ? kExitFail : kExitOk;
    out.report = std::move(report);
  } catch (const BudgetExceeded& e) {
    VerificationReport report;
    report.claim_id = std::string(subcommand);
    report.status = Status::Inconclusive;
    report.seed = config.seed;
    report.config_echo = config_echo(config);
    report.witnesses.push_back(
        {{"kind", "budget_refused"}, {"required", e.required().get_str()}, {"budget", e.budget()}});
    report.notes.push_back(e.what());
    out.exit_code = kExitBadInput;
    out.diagnostics.push_back(e.what());
    out.report = std::move(report);
  } catch (const InputError& e) {
    out.exit_code = kExitBadInput;
    for (const Diagnostic& d : e.diagnostics()) out.diagnostics.push_back(d.str());
  } catch (const DomainError& e) {
    out.exit_code = kExitBadInput;
    out.diagnostics.push_back(e.what());
  }
  return out;
}

namespace {

std::string_view describe(std::string_view name) {
  if (name == "verify-counterexample") return "nu: non-monotone yet maxitive on comonotone pairs";
  if (name == "finite-census") return "classify every functional on a finite grid";
  if (name == "integral-properties") return "t-normed integrals of every grid capacity";
  if (name == "tnorm-axioms") return "axioms of the built-in t-norms on --grid";
  if (name == "comonotone-check") return "pairwise comonotonicity of input functions";
  if (name == "explore-problem1") return "search normalized variants of nu (never conclusive)";
  return "parse inputs and print canonical forms";
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact checks for comonotonically maxitive functionals"};
  app.require_subcommand(1);

  SuiteConfig config;
  std::string grid_text = "0,1/2,1";
  for (std::string_view name : kSubcommands) {
    CLI::App* sub = app.add_subcommand(std::string(name), std::string(describe(name)));
    sub->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    sub->add_option("--samples", config.samples, "generated samples")->capture_default_str();
    sub->add_option("--prefix-max", config.prefix_max, "longest explicit prefix in structured families")
        ->capture_default_str();
    sub->add_option("--grid", grid_text, "comma-separated rationals, e.g. \"0,1/2,1\"")->capture_default_str();
    sub->add_option("--n", config.n, "points of the finite space")->capture_default_str();
    sub->add_option("--budget", config.budget, "largest functional enumeration allowed")->capture_default_str();
    sub->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
    sub->add_option("--output", config.output_path, "report path (default: stdout)");
    sub->add_option("inputs", config.inputs, "input JSON files");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    config.grid = parse_rational_list(grid_text);
  } catch (const DomainError& e) {
    std::cerr << "--grid: " << e.what() << "\n";
    return kExitBadInput;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  const RunOutcome out = run(subcommand, config);
  for (const std::string& d : out.diagnostics) std::cerr << "error: " << d << "\n";
  if (!out.report) return out.exit_code;

  const std::string text = out.report->serialize();
  if (config.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << config.output_path << "\n";
      return kExitBadInput;
    }
    file << text;
  }
  std::cerr << out.report->claim_id << ": " << to_string(out.report->status) << "\n";
  return out.exit_code;
}

}  // namespace comax::cli
