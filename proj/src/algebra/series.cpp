#include "toda_rpp/algebra/series.hpp"

#include <algorithm>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

namespace {

LaurentPoly truncated_product(const LaurentPoly& a, const LaurentPoly& b, int bound) {
  std::vector<Term> products;
  for (const auto& s : a.terms()) {
    const int ds = s.mono.total_degree();
    if (ds > bound) continue;
    for (const auto& t : b.terms()) {
      if (ds + t.mono.total_degree() > bound) continue;
      products.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
    }
  }
  return LaurentPoly::from_terms(std::move(products));
}

}  // namespace

TruncatedSeries::TruncatedSeries(const LaurentPoly& p, int bound) : poly_(p.truncated(bound)), bound_(bound) {
  if (bound < 0) throw DomainError("series degree bound must be nonnegative");
  if (p.has_negative_exponent()) throw DomainError("not a power series: " + p.to_string());
}

mpq_class TruncatedSeries::coefficient(const Monomial& m) const {
  for (const auto& t : poly_.terms()) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries(a.poly_ + b.poly_, std::min(a.bound_, b.bound_));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries(a.poly_ - b.poly_, std::min(a.bound_, b.bound_));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int bound = std::min(a.bound_, b.bound_);
  return TruncatedSeries(truncated_product(a.poly_, b.poly_, bound), bound);
}

std::string TruncatedSeries::to_string() const {
  return poly_.to_string() + "+O(deg>" + std::to_string(bound_) + ")";
}

TruncatedSeries geometric_series(const LaurentPoly& u, int bound) {
  if (u.constant_term() != 0) throw NotAUnit("geometric series needs u without constant term");
  if (u.has_negative_exponent()) throw DomainError("not a power series: " + u.to_string());
  // Horner: 1 + u(1 + u(1 + ...)), depth = bound since u has order >= 1.
  LaurentPoly acc(1);
  for (int k = 0; k < bound; ++k) acc = LaurentPoly(1) + truncated_product(u, acc, bound);
  return TruncatedSeries(acc, bound);
}

TruncatedSeries series_truncate(const Scalar& s, int bound) {
  const LaurentPoly& den = s.den();
  const mpq_class c0 = den.constant_term();
  if (c0 == 0) throw NotAUnit("denominator " + den.to_string() + " is not a unit in the power-series ring");
  if (s.num().has_negative_exponent()) throw NotAUnit("monomial denominator in " + s.to_string());
  // den = c0 (1 - u)
  LaurentPoly u = LaurentPoly(1) - den.scaled(1 / c0);
  TruncatedSeries inv = geometric_series(u, bound);
  return TruncatedSeries(s.num().scaled(1 / c0), bound) * inv;
}

}  // namespace toda_rpp
