#include "toda_rpp/identities/factored.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

LaurentPoly binomial_power(const Monomial& m, int e) {
  LaurentPoly base = LaurentPoly(1) - LaurentPoly::monomial(m);
  return base.pow(static_cast<unsigned>(e));
}

BinomialFraction BinomialFraction::ratio(const Monomial& top, const Monomial& bottom) {
  BinomialFraction f(LaurentPoly(1));
  f.multiply_binomial(top, 1);
  f.multiply_binomial(bottom, -1);
  return f;
}

void BinomialFraction::multiply_binomial(const Monomial& m, int e) {
  if (m.is_one()) throw DomainError("binomial factor 1 - 1");
  if (e == 0) return;
  auto it = den_.find(m);
  int have = it == den_.end() ? 0 : it->second;
  if (e > 0) {
    const int cancel = std::min(have, e);
    if (cancel > 0) {
      if (have == cancel) {
        den_.erase(it);
      } else {
        it->second -= cancel;
      }
    }
    if (e > cancel) num_ *= binomial_power(m, e - cancel);
  } else {
    den_[m] = have - e;
  }
}

BinomialFraction& BinomialFraction::operator*=(const BinomialFraction& rhs) {
  num_ *= rhs.num_;
  for (const auto& [m, e] : rhs.den_) den_[m] += e;
  return *this;
}

Scalar BinomialFraction::to_scalar() const {
  LaurentPoly den(1);
  for (const auto& [m, e] : den_) den *= binomial_power(m, e);
  return Scalar(num_, den);
}

namespace {

// For m with some variable v of exponent 1, 1 - m divides p exactly when p
// vanishes under v -> v / m.
std::optional<bool> vanishes_on(const LaurentPoly& p, const Monomial& m) {
  for (const Power& pw : m.powers()) {
    if (pw.exp != 1) continue;
    const Monomial step = m.inverse() * Monomial::of(pw.var);  // v / m
    std::map<Monomial, mpq_class> image;
    for (const auto& t : p.terms()) {
      const int k = t.mono.exponent(pw.var);
      Monomial moved = k == 0 ? t.mono : t.mono.without(pw.var) * step.pow(k);
      image[moved] += t.coeff;
    }
    for (const auto& [mono, c] : image)
      if (c != 0) return false;
    return true;
  }
  return std::nullopt;
}

// a + b over the union of the factor multisets, then cancels any factor that
// divides the new numerator.
BinomialFraction add(const BinomialFraction& a, const BinomialFraction& b) {
  if (a.num().is_zero()) return b;
  if (b.num().is_zero()) return a;
  std::map<Monomial, int> common = a.den();
  for (const auto& [m, e] : b.den()) common[m] = std::max(common[m], e);
  auto scaled = [&common](const BinomialFraction& f) {
    LaurentPoly out = f.num();
    for (const auto& [m, e] : common) {
      auto it = f.den().find(m);
      const int missing = e - (it == f.den().end() ? 0 : it->second);
      if (missing > 0) out *= binomial_power(m, missing);
    }
    return out;
  };
  LaurentPoly num = scaled(a) + scaled(b);
  BinomialFraction out(num);
  if (num.is_zero()) return out;
  for (auto& [m, e] : common) {
    const LaurentPoly factor = binomial_power(m, 1);
    while (e > 0) {
      if (vanishes_on(num, m) == false) break;
      auto q = divide_exact(num, factor);
      if (!q) break;
      num = std::move(*q);
      --e;
    }
  }
  out = BinomialFraction(num);
  for (const auto& [m, e] : common)
    if (e > 0) out.multiply_binomial(m, -e);
  return out;
}

BinomialFraction sum_range(std::span<const BinomialFraction> terms) {
  if (terms.empty()) return {};
  if (terms.size() == 1) return terms.front();
  const std::size_t mid = terms.size() / 2;
  return add(sum_range(terms.first(mid)), sum_range(terms.subspan(mid)));
}

}  // namespace

BinomialFraction sum(std::span<const BinomialFraction> terms) {
  BinomialFraction acc;
  for (const auto& t : terms) acc = add(acc, t);
  return acc;
}

}  // namespace toda_rpp
