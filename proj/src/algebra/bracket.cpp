#include "toda_rpp/algebra/bracket.hpp"

#include <vector>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

Scalar bracket(const IndexedFamily& z, int m, int n, BracketConvention conv) {
  std::vector<Scalar> factors;
  if (m <= n) {
    for (int l = m; l <= n; ++l) factors.push_back(z(l));
    return product(factors);
  }
  if (m == n + 1) return Scalar(1);
  const int lo = conv == BracketConvention::Inclusive ? n : n + 1;
  for (int l = lo; l <= m - 1; ++l) {
    Scalar v = z(l);
    if (v.is_zero()) throw DivisionByZero("bracket factor z[" + std::to_string(l) + "] is zero");
    factors.push_back(v);
  }
  return product(factors).inverse();
}

IndexedFamily variable_family(const std::string& family) {
  return [family](int l) { return Scalar(Variable(family, l)); };
}

}  // namespace toda_rpp
