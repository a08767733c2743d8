#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toda_rpp/algebra/monomial.hpp"

namespace toda_rpp {

struct Term {
  Monomial mono;
  mpq_class coeff;
};

/// Sparse Laurent polynomial over Q in any number of variables.
///
/// Terms are stored in strictly decreasing monomial order with no zero
/// coefficients, so structural equality is value equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly variable(Variable v, int exp = 1);
  static LaurentPoly monomial(const Monomial& m, const mpq_class& c = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const noexcept;
  bool has_negative_exponent() const noexcept;
  mpq_class constant_term() const;
  /// Largest term in monomial order; requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }

  std::vector<Variable> variables() const;
  int degree_in(Variable v) const;
  int total_degree() const;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const mpq_class& c) const;
  LaurentPoly shifted(const Monomial& m) const;
  LaurentPoly pow(unsigned e) const;
  /// Drops every term of total degree > max_degree.
  LaurentPoly truncated(int max_degree) const;

  /// Coefficient of v^k for each k present, with v removed from the monomials.
  std::map<int, LaurentPoly> coefficients_in(Variable v) const;
  LaurentPoly coefficient_in(Variable v, int k) const;

  /// Canonical text: terms in increasing monomial order, e.g. `1-x[-1]*x[0]`.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::vector<Term> terms_;
};

/// a / b when b divides a in the Laurent ring, otherwise nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in Q[x^{+-1}], normalized as a polynomial with no
/// monomial factor and leading coefficient 1. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// The associate of p with no monomial factor and leading coefficient 1,
/// together with the unit (coefficient * monomial) removed.
struct UnitSplit {
  LaurentPoly normalized;
  mpq_class coeff;
  Monomial mono;
};
UnitSplit split_unit(const LaurentPoly& p);

}  // namespace toda_rpp
