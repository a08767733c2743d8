#pragma once

#include <string>

#include "toda_rpp/algebra/scalar.hpp"

namespace toda_rpp {

/// Power series in any set of variables, truncated at total degree `bound`:
/// every term of total degree > bound is discarded after each operation.
class TruncatedSeries {
 public:
  /// Truncates p; throws DomainError if p has a negative exponent.
  TruncatedSeries(const LaurentPoly& p, int bound);

  int bound() const noexcept { return bound_; }
  const LaurentPoly& poly() const noexcept { return poly_; }
  mpq_class coefficient(const Monomial& m) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.bound_ == b.bound_ && a.poly_ == b.poly_;
  }

  /// `poly+O(deg>bound)`.
  std::string to_string() const;

 private:
  LaurentPoly poly_;
  int bound_;
};

/// Power-series expansion of s to total degree `bound`.
/// Throws NotAUnit when the denominator has zero constant term.
TruncatedSeries series_truncate(const Scalar& s, int bound);

/// 1 / (1 - u) for u without constant term.
TruncatedSeries geometric_series(const LaurentPoly& u, int bound);

}  // namespace toda_rpp
