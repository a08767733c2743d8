// Multivariate gcd over Q by recursive primitive polynomial remainder
// sequences. Inputs in this project are sparse with low degree per variable,
// so the recursion stays shallow; the variable-elimination shortcut below
// removes most variables before any remainder sequence is run.

#include <algorithm>
#include <cassert>

#include "toda_rpp/algebra/laurent_poly.hpp"

namespace toda_rpp {

UnitSplit split_unit(const LaurentPoly& p) {
  if (p.is_zero()) return {LaurentPoly{}, 1, Monomial{}};
  Monomial m = p.monomial_content();
  LaurentPoly q = p.shifted(m.inverse());
  mpq_class c = q.leading_term().coeff;
  return {q.scaled(1 / c), c, m};
}

namespace {

LaurentPoly gcd_normalized(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly normalized(const LaurentPoly& p) { return split_unit(p).normalized; }

// Content of p with respect to x: gcd of its coefficients in x.
LaurentPoly content_in(const LaurentPoly& p, Variable x) {
  LaurentPoly g;
  for (const auto& [k, coeff] : p.coefficients_in(x)) {
    g = g.is_zero() ? normalized(coeff) : gcd_normalized(g, normalized(coeff));
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, Variable x) {
  LaurentPoly cont = content_in(p, x);
  if (cont.is_one()) return normalized(p);
  auto q = divide_exact(p, cont);
  assert(q.has_value());
  return normalized(*q);
}

LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, Variable x) {
  const int d = b.degree_in(x);
  const LaurentPoly lead_b = b.coefficient_in(x, d);
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const int e = r.degree_in(x);
    if (e < d) break;
    LaurentPoly lead_r = r.coefficient_in(x, e);
    r = lead_b * r - (lead_r * b).shifted(Monomial::of(x, e - d));
  }
  return r;
}

bool subset(const std::vector<Variable>& small, const std::vector<Variable>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Both arguments nonzero polynomials without monomial factor, leading coefficient 1.
LaurentPoly gcd_normalized(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  if (a == b) return a;

  const auto vars_a = a.variables();
  const auto vars_b = b.variables();
  if (subset(vars_b, vars_a)) {
    if (divide_exact(a, b)) return b;
  }
  if (subset(vars_a, vars_b)) {
    if (divide_exact(b, a)) return a;
  }

  // A variable occurring on one side only cannot occur in the gcd, which
  // then divides every coefficient of the other side in that variable.
  for (Variable v : vars_a) {
    if (!std::binary_search(vars_b.begin(), vars_b.end(), v)) {
      LaurentPoly g = b;
      for (const auto& [k, coeff] : a.coefficients_in(v)) {
        g = gcd_normalized(g, normalized(coeff));
        if (g.is_one()) break;
      }
      return g;
    }
  }
  for (Variable v : vars_b) {
    if (!std::binary_search(vars_a.begin(), vars_a.end(), v)) {
      LaurentPoly g = a;
      for (const auto& [k, coeff] : b.coefficients_in(v)) {
        g = gcd_normalized(g, normalized(coeff));
        if (g.is_one()) break;
      }
      return g;
    }
  }

  // Same variable set: remainder sequence in the variable of lowest degree.
  Variable x = vars_a.front();
  int best = -1;
  for (Variable v : vars_a) {
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (best < 0 || d < best) {
      best = d;
      x = v;
    }
  }

  LaurentPoly cont_a = content_in(a, x);
  LaurentPoly cont_b = content_in(b, x);
  LaurentPoly cont = gcd_normalized(cont_a, cont_b);
  LaurentPoly p = cont_a.is_one() ? a : normalized(*divide_exact(a, cont_a));
  LaurentPoly q = cont_b.is_one() ? b : normalized(*divide_exact(b, cont_b));
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);

  LaurentPoly g;
  while (true) {
    LaurentPoly r = pseudo_remainder(p, q, x);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree_in(x) == 0) {
      g = LaurentPoly(1);
      break;
    }
    p = std::move(q);
    q = primitive_part(r, x);
  }
  return normalized(cont * g);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  return gcd_normalized(normalized(a), normalized(b));
}

}  // namespace toda_rpp
