#include "toda_rpp/toda/report.hpp"

namespace toda_rpp {

nlohmann::json to_json(const Violation& v) {
  return {{"site", v.site}, {"lhs", v.lhs.to_string()}, {"rhs", v.rhs.to_string()}};
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : report) out.push_back(to_json(v));
  return out;
}

}  // namespace toda_rpp
