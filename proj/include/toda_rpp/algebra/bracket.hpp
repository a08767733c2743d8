#pragma once

#include <functional>
#include <string>

#include "toda_rpp/algebra/scalar.hpp"

namespace toda_rpp {

using IndexedFamily = std::function<Scalar(int)>;

/// Reading of the reversed branch (m >= n+2) of [z]_m^n.
enum class BracketConvention {
  Inclusive,    // prod_{l=n}^{m-1} z_l^{-1}
  Telescoping,  // prod_{l=n+1}^{m-1} z_l^{-1}
};

/// [z]_m^n: prod_{l=m}^{n} z_l for m <= n, 1 for m = n+1, reversed product
/// of inverses for m >= n+2. Throws DivisionByZero when a reversed factor is 0.
Scalar bracket(const IndexedFamily& z, int m, int n, BracketConvention conv = BracketConvention::Inclusive);

/// l -> family[l].
IndexedFamily variable_family(const std::string& family);

}  // namespace toda_rpp
