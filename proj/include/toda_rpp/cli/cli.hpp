#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toda_rpp/shapes/partition.hpp"
#include "toda_rpp/toda/rng.hpp"

namespace toda_rpp::cli {

enum class Mode { Rational, Q, X };

struct RunConfig {
  std::string command;
  Partition shape{std::vector<int>{2, 1}};
  int r = 2;
  int c = 2;
  int n = 2;
  Mode mode = Mode::Q;
  std::uint64_t seed = 0;
  int trials = 3;
  int degree = 4;
  std::optional<std::string> identity;
  std::optional<std::string> out;
};

/// Identities accepted by --identity.
const std::vector<std::string>& identity_names();

/// Result records for one identity. Random trials draw from rng in order.
nlohmann::json verify_identity(const std::string& identity, const RunConfig& cfg, SeededRng& rng);

nlohmann::json cmd_verify(const RunConfig& cfg);
nlohmann::json cmd_enumerate(const RunConfig& cfg);
nlohmann::json cmd_genfun(const RunConfig& cfg);
nlohmann::json cmd_bijection(const RunConfig& cfg);
nlohmann::json cmd_toda_check(const RunConfig& cfg);

/// Exit codes: 0 all equal, 1 some identity failed, 2 usage, 3 resample exhaustion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toda_rpp::cli
