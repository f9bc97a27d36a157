#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace comax {

enum class Status { Pass, Fail, Finding, Inconclusive };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Machine-readable outcome of one verification suite.
///
/// Serialization sorts keys and is newline-terminated, so two reports built
/// from the same inputs are byte-identical. A failing report always carries
/// at least one witness.
struct VerificationReport {
  std::string claim_id;
  Status status = Status::Inconclusive;
  std::map<std::string, std::int64_t> counts;
  std::vector<nlohmann::json> witnesses;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  nlohmann::json config_echo = nlohmann::json::object();

  void add_count(const std::string& key, std::int64_t delta = 1) { counts[key] += delta; }
  std::int64_t count(const std::string& key) const;

  /// Sets status to Fail and records the witness.
  void fail(nlohmann::json witness);

  nlohmann::json to_json() const;
  std::string serialize() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

}  // namespace comax
