#pragma once

#include <map>
#include <span>

#include "toda_rpp/algebra/scalar.hpp"

namespace toda_rpp {

/// num / prod_m (1 - m)^{e_m} with nonconstant monomials m.
///
/// Sums use the union of the binomial factor multisets as common
/// denominator, so adding many weights costs one gcd at the end instead of
/// one per addition.
class BinomialFraction {
 public:
  BinomialFraction() = default;  // zero
  BinomialFraction(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)

  /// (1 - top) / (1 - bottom), cancelling when top == bottom.
  static BinomialFraction ratio(const Monomial& top, const Monomial& bottom);

  const LaurentPoly& num() const noexcept { return num_; }
  const std::map<Monomial, int>& den() const noexcept { return den_; }

  /// Multiplies by (1 - m)^e; e may be negative. Throws DomainError for constant m.
  void multiply_binomial(const Monomial& m, int e);
  BinomialFraction& operator*=(const BinomialFraction& rhs);

  Scalar to_scalar() const;

 private:
  LaurentPoly num_;
  std::map<Monomial, int> den_;
};

BinomialFraction sum(std::span<const BinomialFraction> terms);

/// (1 - m)^e expanded.
LaurentPoly binomial_power(const Monomial& m, int e);

}  // namespace toda_rpp
