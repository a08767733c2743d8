#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "toda_rpp/algebra/scalar.hpp"

namespace toda_rpp {

/// One failed equality: where, and the two sides.
struct Violation {
  std::string site;
  Scalar lhs;
  Scalar rhs;
};

/// Empty when every checked equality holds.
using Report = std::vector<Violation>;

inline void check_equal(Report& report, std::string site, const Scalar& lhs, const Scalar& rhs) {
  if (!(lhs == rhs)) report.push_back(Violation{std::move(site), lhs, rhs});
}

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const Report& report);

}  // namespace toda_rpp
