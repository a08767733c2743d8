#include "toda_rpp/algebra/scalar.hpp"

#include <algorithm>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

namespace {

LaurentPoly quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division in fraction reduction");
  return *std::move(q);
}

}  // namespace

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::from_coprime(LaurentPoly num, const LaurentPoly& den) {
  if (num.is_zero()) return Scalar();
  if (den.is_constant()) {
    return Scalar(num.scaled(1 / den.constant_term()), LaurentPoly(1), Reduced{});
  }
  UnitSplit unit = split_unit(den);
  num = num.shifted(unit.mono.inverse()).scaled(1 / unit.coeff);
  return Scalar(std::move(num), std::move(unit.normalized), Reduced{});
}

Scalar::Scalar(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("division by zero");
  if (num.is_zero()) return;
  if (den.is_monomial()) {
    const Term& t = den.leading_term();
    num_ = num.shifted(t.mono.inverse()).scaled(1 / t.coeff);
    return;
  }
  LaurentPoly g = gcd(num, den);
  *this = from_coprime(quotient(num, g), quotient(den, g));
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw DomainError("not a rational number: " + to_string());
  return num_.constant_term();
}

std::vector<Variable> Scalar::variables() const {
  auto a = num_.variables();
  auto b = den_.variables();
  std::vector<Variable> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Reduced{}); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return from_coprime(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  auto k = static_cast<unsigned>(e);
  return Scalar(num_.pow(k), den_.pow(k), Reduced{});
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_, LaurentPoly(1), Scalar::Reduced{});
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  // With g = gcd(b1, b2) the sum's numerator is coprime to b1/g and b2/g,
  // so only g can cancel afterwards.
  LaurentPoly g = gcd(a.den_, b.den_);
  LaurentPoly da = quotient(a.den_, g);
  LaurentPoly db = quotient(b.den_, g);
  LaurentPoly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return Scalar();
  LaurentPoly den = da * b.den_;
  if (g.is_one()) return Scalar::from_coprime(std::move(num), den);
  LaurentPoly h = gcd(num, g);
  return Scalar::from_coprime(quotient(num, h), quotient(den, h));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_, LaurentPoly(1), Scalar::Reduced{});
  // Cross-cancel: (n1/d1)(n2/d2) with g1 = gcd(n1, d2), g2 = gcd(n2, d1).
  LaurentPoly g1 = b.den_.is_one() ? LaurentPoly(1) : gcd(a.num_, b.den_);
  LaurentPoly g2 = a.den_.is_one() ? LaurentPoly(1) : gcd(b.num_, a.den_);
  LaurentPoly num = quotient(a.num_, g1) * quotient(b.num_, g2);
  LaurentPoly den = quotient(a.den_, g2) * quotient(b.den_, g1);
  return Scalar::from_coprime(std::move(num), den);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar sum(std::span<const Scalar> values) {
  if (values.empty()) return Scalar();
  if (values.size() == 1) return values.front();
  auto mid = values.size() / 2;
  return sum(values.subspan(0, mid)) + sum(values.subspan(mid));
}

Scalar product(std::span<const Scalar> values) {
  if (values.empty()) return Scalar(1);
  if (values.size() == 1) return values.front();
  auto mid = values.size() / 2;
  return product(values.subspan(0, mid)) * product(values.subspan(mid));
}

namespace {

bool all_monomial(const Substitution& sigma, const std::vector<Variable>& vars) {
  for (Variable v : vars) {
    auto it = sigma.find(v);
    if (it == sigma.end()) continue;
    const Scalar& s = it->second;
    if (!s.den().is_one() || !s.num().is_monomial()) return false;
  }
  return true;
}

LaurentPoly substitute_monomials(const LaurentPoly& p, const Substitution& sigma) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term out{Monomial{}, t.coeff};
    for (const auto& pw : t.mono.powers()) {
      auto it = sigma.find(pw.var);
      if (it == sigma.end()) {
        out.mono = out.mono * Monomial::of(pw.var, pw.exp);
        continue;
      }
      const Term& image = it->second.num().leading_term();
      out.mono = out.mono * image.mono.pow(pw.exp);
      mpq_class c = 1;
      for (int k = 0; k < std::abs(pw.exp); ++k) c *= image.coeff;
      out.coeff = pw.exp > 0 ? mpq_class(out.coeff * c) : mpq_class(out.coeff / c);
    }
    terms.push_back(std::move(out));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Scalar evaluate(const LaurentPoly& p, const Substitution& sigma) {
  std::vector<Scalar> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Scalar value(t.coeff);
    for (const auto& pw : t.mono.powers()) {
      auto it = sigma.find(pw.var);
      Scalar base = it == sigma.end() ? Scalar(pw.var) : it->second;
      if (pw.exp < 0 && base.is_zero()) {
        throw PoleError("substitution sends " + pw.var.to_string() + " to zero where it has a negative exponent");
      }
      value *= base.pow(pw.exp);
    }
    terms.push_back(std::move(value));
  }
  return sum(terms);
}

}  // namespace

Scalar specialize(const Scalar& s, const Substitution& sigma) {
  if (all_monomial(sigma, s.variables())) {
    LaurentPoly num = substitute_monomials(s.num(), sigma);
    LaurentPoly den = substitute_monomials(s.den(), sigma);
    if (den.is_zero()) {
      throw PoleError("denominator " + s.den().to_string() + " vanishes under the substitution");
    }
    return Scalar(num, den);
  }
  Scalar num = evaluate(s.num(), sigma);
  Scalar den = evaluate(s.den(), sigma);
  if (den.is_zero()) {
    throw PoleError("denominator " + s.den().to_string() + " vanishes under the substitution");
  }
  return num / den;
}

}  // namespace toda_rpp
