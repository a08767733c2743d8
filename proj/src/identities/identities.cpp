#include "toda_rpp/identities/identities.hpp"

#include <map>
#include <vector>

#include "toda_rpp/errors.hpp"
#include "toda_rpp/lattice/paths.hpp"
#include "toda_rpp/toda/toda.hpp"

namespace toda_rpp {

namespace {

const Variable kQ("q");

// x_m x_{m+1} ... x_n for m <= n.
Monomial x_run(int m, int n) {
  if (m > n) throw DomainError("empty or reversed run [" + std::to_string(m) + "," + std::to_string(n) + "]");
  Monomial out;
  for (int l = m; l <= n; ++l) out = out * Monomial::of(Variable("x", l));
  return out;
}

Monomial q_pow(int e) { return Monomial::of(kQ, e); }

Monomial trace_monomial(const RppTable& pi) {
  const Partition& lambda = pi.shape();
  Monomial out;
  for (int l = 1 - lambda.r(); l <= lambda.c() - 1; ++l) out = out * Monomial::of(Variable("x", l), pi.trace(l));
  return out;
}

// Applies the net multiset so that numerator factors cancel against the denominator first.
BinomialFraction from_factors(const LaurentPoly& lead, const std::map<Monomial, int>& net) {
  BinomialFraction f(lead);
  for (const auto& [m, e] : net)
    if (e < 0) f.multiply_binomial(m, e);
  for (const auto& [m, e] : net)
    if (e > 0) f.multiply_binomial(m, e);
  return f;
}

nlohmann::json shape_instance(const Partition& lambda, int n) { return {{"shape", lambda.to_string()}, {"n", n}}; }

CheckResult make_result(std::string identity, nlohmann::json instance, const Scalar& lhs, const Scalar& rhs) {
  return CheckResult{std::move(identity), std::move(instance), lhs.to_string(), rhs.to_string(), lhs == rhs};
}

}  // namespace

Report weight_transport_check(const Partition& lambda, int n, const SampleFunction& f) {
  const TodaSolution sol = ab_from_f(f);
  const RegularLattice L = lattice_from_partition(lambda, n);
  const int r = lambda.r(), c = lambda.c();
  std::vector<Scalar> den;
  for (int i = 1; i <= r; ++i)
    for (int k = 1; k <= n; ++k) den.push_back(sol.a(r - i, c - lambda.part_ext(i), k - 1));
  const Scalar kappa = product(den);
  Report report;
  for_each_rpp(lambda, n, [&](const RppTable& pi) {
    std::vector<Scalar> weights;
    for (const auto& path : rpp_to_lp(pi, lambda, n)) weights.push_back(path_weight(L, sol, path));
    check_equal(report, "weight " + pi.to_json().dump(), rpp_weight(lambda, n, sol, pi), product(weights) / kappa);
  });
  return report;
}

Scalar pf_lhs(const Partition& lambda, int n, const TodaSolution& sol) {
  std::vector<Scalar> terms;
  for_each_rpp(lambda, n, [&](const RppTable& pi) { terms.push_back(rpp_weight(lambda, n, sol, pi)); });
  return sum(terms);
}

Scalar pf_rhs(const Partition& lambda, int n, const TodaSolution& sol) {
  const int r = lambda.r(), c = lambda.c();
  std::vector<Scalar> num, den;
  for (int i = 1; i <= r; ++i) {
    for (int k = 1; k <= n; ++k) {
      num.push_back(sol.a(r - i, c, k - 1));
      den.push_back(sol.a(r - i, c - lambda.part_ext(i), k - 1));
    }
  }
  return product(num) / product(den);
}

BinomialFraction weight_x_fraction(const Partition& lambda, int n, const RppTable& pi) {
  std::map<Monomial, int> net;
  for (Cell cell : lambda.cells()) {
    const int i = cell.i, j = cell.j;
    for (int k = 1; k <= pi.at(cell); ++k) {
      const int top = -n + j + k - 1;
      const int bottom = -n + j + k;
      net[x_run(top - lambda.conj_ext(top), j - i - 1)] += 1;
      net[x_run(bottom - lambda.conj_ext(bottom), j - i)] -= 1;
    }
  }
  return from_factors(LaurentPoly::monomial(trace_monomial(pi)), net);
}

Scalar weight_x(const Partition& lambda, int n, const RppTable& pi) { return weight_x_fraction(lambda, n, pi).to_scalar(); }

Scalar pf_x_lhs(const Partition& lambda, int n) {
  std::vector<BinomialFraction> terms;
  for_each_rpp(lambda, n, [&](const RppTable& pi) { terms.push_back(weight_x_fraction(lambda, n, pi)); });
  return sum(terms).to_scalar();
}

Scalar pf_x_rhs(const Partition& lambda, int n) {
  std::map<Monomial, int> net;
  for (Cell cell : lambda.cells()) {
    const int i = cell.i, j = cell.j;
    const int hi = lambda.part_ext(i) - i;
    net[x_run(-n + j - lambda.conj_ext(-n + j), hi)] += 1;
    net[x_run(j - lambda.conj_ext(j), hi)] -= 1;
  }
  return from_factors(LaurentPoly(1), net).to_scalar();
}

namespace {

BinomialFraction q_weight_fraction(const Partition& lambda, int n, const RppTable& pi) {
  std::map<Monomial, int> net;
  for (Cell cell : lambda.cells()) {
    const int i = cell.i, j = cell.j;
    for (int k = 1; k <= pi.at(cell); ++k) {
      net[q_pow(n - i - k + 1 + lambda.conj_ext(-n + j + k - 1))] += 1;
      net[q_pow(n - i - k + 1 + lambda.conj_ext(-n + j + k))] -= 1;
    }
  }
  return from_factors(LaurentPoly::monomial(q_pow(pi.size())), net);
}

}  // namespace

Scalar q_weight(const Partition& lambda, int n, const RppTable& pi) { return q_weight_fraction(lambda, n, pi).to_scalar(); }

Scalar specialize_x_to_q(const Scalar& s) {
  Substitution sigma;
  for (Variable v : s.variables())
    if (v.indexed() && v.family() == "x") sigma.emplace(v, Scalar(kQ));
  return specialize(s, sigma);
}

Scalar q_weight_specialized(const Partition& lambda, int n, const RppTable& pi) {
  return specialize_x_to_q(weight_x(lambda, n, pi));
}

Scalar q_lhs(const Partition& lambda, int n) {
  std::vector<BinomialFraction> terms;
  for_each_rpp(lambda, n, [&](const RppTable& pi) { terms.push_back(q_weight_fraction(lambda, n, pi)); });
  return sum(terms).to_scalar();
}

Scalar q_rhs(const Partition& lambda, int n) {
  std::map<Monomial, int> net;
  for (Cell cell : lambda.cells()) {
    const int i = cell.i, j = cell.j;
    const int li = lambda.part_ext(i);
    net[q_pow(li + lambda.conj_ext(j - n) - i - j + n + 1)] += 1;
    net[q_pow(li + lambda.conj_ext(j) - i - j + 1)] -= 1;
  }
  return from_factors(LaurentPoly(1), net).to_scalar();
}

Scalar macmahon_lhs(int r, int c, int n) {
  std::map<int, long> by_size;
  for_each_rpp(Partition::rectangle(r, c), n, [&](const RppTable& pi) { ++by_size[pi.size()]; });
  std::vector<Term> terms;
  for (const auto& [size, count] : by_size) terms.push_back(Term{q_pow(size), mpq_class(count)});
  return Scalar(LaurentPoly::from_terms(std::move(terms)));
}

Scalar macmahon_rhs(int r, int c, int n) {
  if (r < 0 || c < 0 || n < 0) throw DomainError("box dimensions must be nonnegative");
  std::map<Monomial, int> net;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= c; ++j)
      for (int k = 1; k <= n; ++k) {
        net[q_pow(i + j + k - 1)] += 1;
        net[q_pow(i + j + k - 2)] -= 1;
      }
  return from_factors(LaurentPoly(1), net).to_scalar();
}

TruncatedSeries gansner_rhs_truncated(const Partition& lambda, int degree) {
  TruncatedSeries acc(LaurentPoly(1), degree);
  for (Cell cell : lambda.cells()) {
    const Monomial hook = x_run(cell.j - lambda.conj_ext(cell.j), lambda.part_ext(cell.i) - cell.i);
    acc = acc * geometric_series(LaurentPoly::monomial(hook), degree);
  }
  return acc;
}

int gansner_bound(const Partition& lambda, int degree) { return degree + lambda.r() + lambda.c(); }

TruncatedSeries gansner_lhs_truncated(const Partition& lambda, int degree) {
  const int n = gansner_bound(lambda, degree);
  std::vector<Term> total;
  for_each_rpp_up_to_size(lambda, n, degree, [&](const RppTable& pi) {
    const int budget = degree - pi.size();
    const BinomialFraction w = weight_x_fraction(lambda, n, pi);
    TruncatedSeries s(w.num(), degree);
    for (const auto& [m, e] : w.den()) {
      TruncatedSeries g = geometric_series(LaurentPoly::monomial(m), budget);
      for (int k = 0; k < e; ++k) s = s * TruncatedSeries(g.poly(), degree);
    }
    for (const auto& t : s.poly().terms()) total.push_back(t);
  });
  return TruncatedSeries(LaurentPoly::from_terms(std::move(total)), degree);
}

TodaSolution mu_solution(const Partition& lambda, MuReading reading) {
  const int r = lambda.r(), c = lambda.c();
  std::function<int(int)> mu, mu_conj;
  switch (reading) {
    case MuReading::Partition:
      mu = [lambda](int i) { return lambda.part_ext(i); };
      mu_conj = [lambda](int j) { return lambda.conj_ext(j); };
      break;
    case MuReading::Conjugate:
      mu = [lambda](int i) { return lambda.conj_ext(i); };
      mu_conj = [lambda](int j) { return lambda.part_ext(j); };
      break;
    case MuReading::RotatedComplement:
      mu = [lambda, r, c](int k) { return c - lambda.part_ext(r + 1 - k); };
      mu_conj = [lambda, r, c](int j) { return r - lambda.conj_ext(c + 1 - j); };
      break;
  }
  const auto conv = BracketConvention::Telescoping;
  const IndexedFamily x = variable_family("x");
  const Scalar a = bracket(x, c - lambda.conj_ext(c), lambda.part_ext(r) - r, conv);
  IndexedFamily p = [=](int i) { return bracket(x, c - r + i - mu(i), c - r + i - mu(i + 1), conv); };
  IndexedFamily q = [=](int j) { return bracket(x, mu_conj(j + 1) - j - r + c, mu_conj(j) - j - r + c, conv); };
  return closed_form_apq(a, p, q, conv);
}

Report mu_pathway_check(const Partition& lambda, int n, MuReading reading) {
  const TodaSolution sol = mu_solution(lambda, reading);
  Report report;
  for_each_rpp(lambda, n, [&](const RppTable& pi) {
    const std::string site = "mu-pathway " + pi.to_json().dump();
    const Scalar expected = weight_x(lambda, n, pi);
    try {
      check_equal(report, site, rpp_weight(lambda, n, sol, pi), expected);
    } catch (const Error& e) {
      report.push_back(Violation{site + ": " + e.what(), Scalar(), expected});
    }
  });
  return report;
}

CheckResult macmahon_check(int r, int c, int n) {
  return make_result("macmahon", {{"r", r}, {"c", c}, {"n", n}}, macmahon_lhs(r, c, n), macmahon_rhs(r, c, n));
}

CheckResult product_x_check(const Partition& lambda, int n) {
  return make_result("thm5.1", shape_instance(lambda, n), pf_x_lhs(lambda, n), pf_x_rhs(lambda, n));
}

CheckResult q_check(const Partition& lambda, int n) {
  return make_result("qspec", shape_instance(lambda, n), q_lhs(lambda, n), q_rhs(lambda, n));
}

CheckResult gansner_check(const Partition& lambda, int degree) {
  TruncatedSeries lhs = gansner_lhs_truncated(lambda, degree);
  TruncatedSeries rhs = gansner_rhs_truncated(lambda, degree);
  return CheckResult{"gansner",
                     {{"shape", lambda.to_string()}, {"degree", degree}, {"n", gansner_bound(lambda, degree)}},
                     lhs.to_string(),
                     rhs.to_string(),
                     lhs == rhs};
}

CheckResult gansner_q_check(const Partition& lambda, int degree) {
  Scalar lhs = specialize_x_to_q(Scalar(gansner_lhs_truncated(lambda, degree).poly()));
  Scalar rhs = specialize_x_to_q(Scalar(gansner_rhs_truncated(lambda, degree).poly()));
  return make_result("gansner-q", {{"shape", lambda.to_string()}, {"degree", degree}, {"n", gansner_bound(lambda, degree)}}, lhs,
                     rhs);
}

CheckResult product_check(const Partition& lambda, int n, const SampleFunction& f) {
  const TodaSolution sol = ab_from_f(f);
  return make_result("thm4.3", shape_instance(lambda, n), pf_lhs(lambda, n, sol), pf_rhs(lambda, n, sol));
}

}  // namespace toda_rpp
