#pragma once

#include <string>

#include <json.hpp>

namespace toda_rpp {

/// One identity instance: both sides in canonical text and whether they agree.
struct CheckResult {
  std::string identity;
  nlohmann::json instance;
  std::string lhs;
  std::string rhs;
  bool equal = false;

  nlohmann::json to_json() const {
    return {{"identity", identity}, {"instance", instance}, {"lhs", lhs}, {"rhs", rhs}, {"equal", equal}};
  }
};

}  // namespace toda_rpp
