#include "toda_rpp/toda/toda.hpp"

#include <algorithm>
#include <vector>

#include "toda_rpp/lattice/paths.hpp"

namespace toda_rpp {

TodaSolution ab_from_f(const SampleFunction& f) {
  auto a = [f](int s, int t, int n) {
    Scalar num1 = f.tau(s + 1, t, n + 1), num2 = f.tau(s, t, n);
    Scalar den1 = f.tau(s + 1, t, n), den2 = f.tau(s, t, n + 1);
    if (num1.is_zero() || num2.is_zero() || den1.is_zero() || den2.is_zero()) {
      throw SingularMinor("vanishing tau minor at " + site_name("a", s, t, n));
    }
    return num1 * num2 / (den1 * den2);
  };
  auto b = [f](int s, int t, int n) {
    Scalar num1 = f.tau(s, t + 1, n - 1), num2 = f.tau(s, t, n + 1);
    Scalar den1 = f.tau(s, t + 1, n), den2 = f.tau(s, t, n);
    if (num1.is_zero() || num2.is_zero() || den1.is_zero() || den2.is_zero()) {
      throw SingularMinor("vanishing tau minor at " + site_name("b", s, t, n));
    }
    return num1 * num2 / (den1 * den2);
  };
  return TodaSolution(a, b);
}

TodaSolution closed_form_apq(const Scalar& a, IndexedFamily p, IndexedFamily q, BracketConvention conv) {
  auto fa = [a, p, q, conv](int s, int t, int n) {
    Scalar v = bracket(p, s + 1, s + n, conv) * (Scalar(1) - a * bracket(p, 1, s, conv) * bracket(q, 1, t + n, conv));
    if (v.is_zero()) throw NonvanishingViolation(site_name("a", s, t, n) + " vanishes");
    return v;
  };
  auto fb = [a, p, q, conv](int s, int t, int n) {
    Scalar v = a * bracket(p, 1, s + n - 1, conv) * bracket(q, 1, t, conv) * (Scalar(1) - bracket(q, t + 1, t + n, conv));
    if (v.is_zero()) throw NonvanishingViolation(site_name("b", s, t, n) + " vanishes");
    return v;
  };
  return TodaSolution(fa, fb);
}

Report verify_evolution(const TodaSolution& sol, const SiteWindow& w) {
  Report report;
  for (int s = w.s_lo; s <= w.s_hi; ++s) {
    for (int t = w.t_lo; t <= w.t_hi; ++t) {
      for (int n = w.n_lo; n <= w.n_hi; ++n) {
        check_equal(report, site_name("sum", s, t, n), sol.a(s, t + 1, n) + sol.b(s + 1, t, n), sol.a(s, t, n) + sol.b(s, t, n + 1));
        check_equal(report, site_name("product", s, t, n), sol.a(s, t + 1, n) * sol.b(s + 1, t, n + 1),
                    sol.a(s, t, n + 1) * sol.b(s, t, n + 1));
      }
    }
  }
  return report;
}

Report verify_bilinear(const SampleFunction& f, const SiteWindow& w) {
  Report report;
  for (int s = w.s_lo; s <= w.s_hi; ++s) {
    for (int t = w.t_lo; t <= w.t_hi; ++t) {
      for (int n = std::max(1, w.n_lo); n <= w.n_hi; ++n) {
        Scalar lhs = f.tau(s + 1, t + 1, n - 1) * f.tau(s, t, n + 1) + f.tau(s + 1, t, n) * f.tau(s, t + 1, n);
        Scalar rhs = f.tau(s + 1, t + 1, n) * f.tau(s, t, n);
        check_equal(report, site_name("bilinear", s, t, n), lhs, rhs);
      }
    }
  }
  return report;
}

SampleFunction gauge(const SampleFunction& f, const IndexedFamily& phi) {
  const GridWindow& w = f.window();
  std::vector<Scalar> column_factor;
  for (int j = w.j0; j <= w.j1; ++j) {
    Scalar v = phi(j);
    if (v.is_zero()) throw GaugeError("gauge factor for column " + std::to_string(j) + " is zero");
    column_factor.push_back(std::move(v));
  }
  return SampleFunction::from_function(w, [&](int i, int j) { return column_factor[j - w.j0] * f.at(i, j); });
}

GridWindow sample_window_for(const RegularLattice& L) { return GridWindow{L.i_top(), L.i_bot() + 1, L.j_min(), L.j_max()}; }

Report corner_deletion_check(const TodaSolution& sol, const RegularLattice& L, Point corner, Point from, Point to) {
  const int diag = corner.i - corner.j;
  if (from.i - from.j == diag || to.i - to.j == diag) throw DomainError("endpoint on the diagonal of " + to_string(corner));
  const RegularLattice reduced = delete_corner(L, corner);
  if (!reduced.contains(from) || !reduced.contains(to)) throw DomainError("endpoint outside the reduced lattice");
  Report report;
  check_equal(report, "corner" + to_string(corner) + " g" + to_string(from) + "->" + to_string(to), g_sum(L, sol, from, to),
              g_sum(reduced, sol, from, to));
  return report;
}

RegularLattice random_lattice(SeededRng& rng, int max_rows, int max_width) {
  const int rows = rng.uniform_int(2, max_rows);
  std::vector<int> profile(rows);
  int eta = rng.uniform_int(0, max_width);
  for (int k = 0; k < rows; ++k) {
    profile[k] = eta;
    eta = std::max(0, eta - rng.uniform_int(0, 2));
  }
  return RegularLattice(rng.uniform_int(-2, 2), profile, profile.front() + rng.uniform_int(1, 3));
}

Report fundamental_check(const SampleFunction& f, const RegularLattice& L, Point p) {
  if (!L.contains(p)) throw DomainError(to_string(p) + " is not in the lattice");
  TodaSolution sol = ab_from_f(f);
  const int xj = x_of(L, p.j);
  Scalar lhs = f.at(p.i, p.j) / f.at(xj, p.j);
  Scalar rhs = g_sum(L, sol, {p.i, y_of(L, p.i)}, {xj, p.j});
  Report report;
  check_equal(report, "fundamental" + to_string(p), lhs, rhs);
  return report;
}

NiSums ni_sums(const SampleFunction& f, const RegularLattice& L, int s, int t, int n) {
  TodaSolution sol = ab_from_f(f);
  const int xt = x_of(L, t);
  Scalar den = f.tau(xt, t, n);
  if (den.is_zero()) throw SingularMinor("vanishing tau minor tau(" + std::to_string(xt) + "," + std::to_string(t) + "," + std::to_string(n) + ")");
  NiSums out;
  out.det_ratio = f.tau(s, t, n) / den;
  out.path_sum = ni_tuple_sum(L, sol, s, t, n);
  std::vector<Scalar> factors;
  for (int i = 1; i <= s - xt; ++i)
    for (int k = 1; k <= n; ++k) factors.push_back(sol.a(s - i, t, k - 1));
  out.product = product(factors);
  return out;
}

Report ni_sum_check(const SampleFunction& f, const RegularLattice& L, int s, int t, int n) {
  NiSums v = ni_sums(f, L, s, t, n);
  Report report;
  const std::string site = "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(n) + ")";
  check_equal(report, "path_sum" + site, v.det_ratio, v.path_sum);
  check_equal(report, "product" + site, v.det_ratio, v.product);
  return report;
}

}  // namespace toda_rpp
