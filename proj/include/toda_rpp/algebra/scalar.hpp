#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "toda_rpp/algebra/laurent_poly.hpp"

namespace toda_rpp {

/// Element of the field Q(x): a reduced ratio of Laurent polynomials.
///
/// Canonical form: gcd(num, den) = 1, den is a polynomial without monomial
/// factor whose leading term has coefficient +1. Equal values therefore have
/// identical representations and `==` is structural.
class Scalar {
 public:
  Scalar() = default;  // zero
  Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const LaurentPoly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
  Scalar(Variable v) : num_(LaurentPoly::variable(v)) {}  // NOLINT(google-explicit-constructor)
  /// num / den, reduced. Throws DivisionByZero when den is zero.
  Scalar(const LaurentPoly& num, const LaurentPoly& den);

  static Scalar rational(long p, long q);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return den_.is_one() && num_.is_one(); }
  /// True for plain rational numbers.
  bool is_rational() const noexcept { return den_.is_one() && num_.is_constant(); }
  mpq_class to_rational() const;
  std::vector<Variable> variables() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(int e) const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Canonical text, `N` or `(N)/(D)` with N, D in LaurentPoly::to_string form.
  std::string to_string() const;

 private:
  struct Reduced {};
  Scalar(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  // Builds the canonical form from a coprime pair.
  static Scalar from_coprime(LaurentPoly num, const LaurentPoly& den);

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

/// Balanced pairwise summation, which keeps intermediate denominators small.
Scalar sum(std::span<const Scalar> values);
Scalar product(std::span<const Scalar> values);

using Substitution = std::map<Variable, Scalar>;

/// Evaluates s with each variable in `sigma` replaced; other variables stay.
/// Throws PoleError naming the denominator when it vanishes.
Scalar specialize(const Scalar& s, const Substitution& sigma);

}  // namespace toda_rpp
