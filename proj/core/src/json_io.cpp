#include "comax/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

namespace comax {

namespace {

std::string join_messages(const std::vector<Diagnostic>& ds) {
  std::string out = "invalid input";
  for (const Diagnostic& d : ds) out += "\n  " + d.str();
  return out;
}

class Collector {
 public:
  void add(std::string path, std::string message) { ds_.push_back({std::move(path), std::move(message)}); }
  bool ok() const { return ds_.empty(); }
  void raise_if_any() const {
    if (!ds_.empty()) throw InputError(ds_);
  }

  std::optional<Rational> rational(const nlohmann::json& j, const std::string& path) {
    if (!j.is_string()) {
      add(path, "expected a rational string \"p/q\"");
      return std::nullopt;
    }
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const DomainError& e) {
      add(path, e.what());
      return std::nullopt;
    }
  }

  std::optional<Rational> unit(const nlohmann::json& j, const std::string& path) {
    auto r = rational(j, path);
    if (r && !r->in_unit_interval()) {
      add(path, "value " + r->str() + " outside [0,1]");
      return std::nullopt;
    }
    return r;
  }

  const nlohmann::json* field(const nlohmann::json& j, const char* key) {
    if (!j.is_object()) {
      add("", "expected a JSON object");
      return nullptr;
    }
    const auto it = j.find(key);
    if (it == j.end()) {
      add(std::string("/") + key, "missing field");
      return nullptr;
    }
    return &*it;
  }

 private:
  std::vector<Diagnostic> ds_;
};

}  // namespace

InputError::InputError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

nlohmann::json to_json(const Rational& r) { return r.str(); }

nlohmann::json to_json(const GridFunction& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const Rational& v : f.values()) values.push_back(v.str());
  return {{"values", values}};
}

nlohmann::json to_json(const Capacity& cap) {
  nlohmann::json mu = nlohmann::json::object();
  for (std::uint32_t m = 0; m <= cap.full_mask(); ++m) mu[Capacity::subset_key(m)] = cap(m).str();
  return {{"n", cap.size()}, {"mu", mu}};
}

nlohmann::json to_json(const OmegaPoint& x) { return x.str(); }

nlohmann::json to_json(const OmegaFunction& f) {
  nlohmann::json prefix = nlohmann::json::array();
  for (const Rational& v : f.prefix()) prefix.push_back(v.str());
  return {{"vP", f.vP().str()},
          {"prefix", prefix},
          {"alpha", f.alpha().str()},
          {"beta", f.beta().str()},
          {"vLim", f.vLim().str()}};
}

GridFunction parse_grid_function(const nlohmann::json& j) {
  Collector c;
  std::vector<Rational> values;
  if (const auto* arr = c.field(j, "values")) {
    if (!arr->is_array()) {
      c.add("/values", "expected an array");
    } else {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        if (auto v = c.unit((*arr)[i], "/values/" + std::to_string(i))) values.push_back(*v);
      }
    }
  }
  c.raise_if_any();
  return GridFunction(std::move(values));
}

Capacity parse_capacity(const nlohmann::json& j) {
  Collector c;
  std::size_t n = 0;
  if (const auto* nj = c.field(j, "n")) {
    if (!nj->is_number_integer() || nj->get<std::int64_t>() < 1 || nj->get<std::int64_t>() > 10) {
      c.add("/n", "expected an integer between 1 and 10");
    } else {
      n = nj->get<std::size_t>();
    }
  }
  const auto* mu = c.field(j, "mu");
  if (mu && !mu->is_object()) {
    c.add("/mu", "expected an object keyed by sorted index strings");
    mu = nullptr;
  }
  c.raise_if_any();

  std::vector<std::optional<Rational>> table(std::size_t{1} << n);
  for (const auto& [key, value] : mu->items()) {
    const std::string path = "/mu/" + key;
    std::uint32_t mask = 0;
    bool good = true;
    int last = -1;
    for (char ch : key) {
      const int i = ch - '0';
      if (i < 0 || i >= static_cast<int>(n) || i <= last) {
        good = false;
        break;
      }
      last = i;
      mask |= 1u << i;
    }
    if (!good) {
      c.add(path, "subset key must list distinct point indices below n in increasing order");
      continue;
    }
    if (auto v = c.unit(value, path)) table[mask] = *v;
  }
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    if (!table[m]) c.add("/mu/" + Capacity::subset_key(m), "missing subset");
  }
  if (c.ok()) {
    if (*table.front() != Rational(0)) c.add("/mu/", "capacity of the empty set must be 0");
    if (*table.back() != Rational(1)) c.add("/mu/" + Capacity::subset_key(table.size() - 1), "capacity of the whole space must be 1");
    for (std::uint32_t a = 0; a < table.size(); ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t b = a | (1u << i);
        if (*table[a] > *table[b]) {
          c.add("/mu/" + Capacity::subset_key(b), "monotonicity violation: mu({" + Capacity::subset_key(a) + "}) = " +
                                                      table[a]->str() + " > mu({" + Capacity::subset_key(b) +
                                                      "}) = " + table[b]->str());
        }
      }
    }
  }
  c.raise_if_any();

  std::vector<Rational> values;
  values.reserve(table.size());
  for (auto& v : table) values.push_back(*v);
  return Capacity(n, std::move(values));
}

OmegaFunction parse_omega_function(const nlohmann::json& j) {
  Collector c;
  std::optional<Rational> vP, alpha, beta;
  std::vector<Rational> prefix;
  if (const auto* f = c.field(j, "vP")) vP = c.unit(*f, "/vP");
  if (const auto* f = c.field(j, "prefix")) {
    if (!f->is_array()) {
      c.add("/prefix", "expected an array");
    } else {
      for (std::size_t i = 0; i < f->size(); ++i) {
        if (auto v = c.unit((*f)[i], "/prefix/" + std::to_string(i))) prefix.push_back(*v);
      }
    }
  }
  if (const auto* f = c.field(j, "alpha")) alpha = c.rational(*f, "/alpha");
  if (const auto* f = c.field(j, "beta")) beta = c.rational(*f, "/beta");
  if (alpha && beta && j.contains("vLim")) {
    if (auto lim = c.rational(j["vLim"], "/vLim"); lim && *lim != *alpha + *beta) {
      c.add("/vLim", "continuity violation: vLim " + lim->str() + " != alpha + beta = " + (*alpha + *beta).str());
    }
  }
  c.raise_if_any();

  try {
    return OmegaFunction::make(*vP, std::move(prefix), *alpha, *beta);
  } catch (const DomainError& e) {
    c.add("/beta", e.what());
    c.raise_if_any();
  }
  throw std::logic_error("unreachable");
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("", path + ": " + e.what());
  }
}

}  // namespace comax
