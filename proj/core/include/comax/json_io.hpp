#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "comax/grid.hpp"
#include "comax/omega.hpp"
#include "comax/rational.hpp"

namespace comax {

/// One problem found while validating input, located by JSON pointer.
struct Diagnostic {
  std::string path;
  std::string message;

  std::string str() const { return (path.empty() ? "/" : path) + ": " + message; }
};

/// Input rejected by validation; carries every diagnostic that was found.
class InputError : public std::runtime_error {
 public:
  explicit InputError(std::vector<Diagnostic> diagnostics);
  InputError(std::string path, std::string message) : InputError(std::vector<Diagnostic>{{std::move(path), std::move(message)}}) {}

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const GridFunction& f);
nlohmann::json to_json(const Capacity& cap);
nlohmann::json to_json(const OmegaPoint& x);
/// {"vP","prefix","alpha","beta","vLim"}; vLim is informational.
nlohmann::json to_json(const OmegaFunction& f);

/// {"values": ["1/2", "3/4"]}
GridFunction parse_grid_function(const nlohmann::json& j);
/// {"n": 2, "mu": {"": "0", "0": "1/2", "1": "1/2", "01": "1"}}
Capacity parse_capacity(const nlohmann::json& j);
/// {"vP": "1/2", "prefix": ["0"], "alpha": "0", "beta": "1/2"}; an optional
/// "vLim" must equal alpha + beta. The result is canonical.
OmegaFunction parse_omega_function(const nlohmann::json& j);

/// "0,1/2,1" -> values; throws DomainError on malformed entries.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Reads and parses a JSON file; failures become InputError diagnostics.
nlohmann::json read_json_file(const std::string& path);

}  // namespace comax
