#pragma once

#include "toda_rpp/algebra/series.hpp"
#include "toda_rpp/identities/alpha.hpp"
#include "toda_rpp/identities/bijection.hpp"
#include "toda_rpp/identities/check_result.hpp"
#include "toda_rpp/identities/factored.hpp"
#include "toda_rpp/toda/report.hpp"

namespace toda_rpp {

/// v(pi) against prod_k w(P_k) / prod_i prod_k a^{(r-i, c-lambda_i)}_{k-1} for
/// every pi in RPP(lambda, n), with the solution derived from f.
Report weight_transport_check(const Partition& lambda, int n, const SampleFunction& f);

/// Sum of rpp_weight over RPP(lambda, n).
Scalar pf_lhs(const Partition& lambda, int n, const TodaSolution& sol);
/// prod_{i=1}^{r} prod_{k=1}^{n} a^{(r-i, c)}_{k-1} / a^{(r-i, c-lambda_i)}_{k-1}.
Scalar pf_rhs(const Partition& lambda, int n, const TodaSolution& sol);

/// Weight of pi under x_l-specialization: trace monomial times, for each
/// cell and k = 1..pi_{i,j},
///   (1 - [x]_{-n+j+k-1-lambda'_{-n+j+k-1}}^{j-i-1}) / (1 - [x]_{-n+j+k-lambda'_{-n+j+k}}^{j-i}).
BinomialFraction weight_x_fraction(const Partition& lambda, int n, const RppTable& pi);
Scalar weight_x(const Partition& lambda, int n, const RppTable& pi);
/// Sum of weight_x over RPP(lambda, n).
Scalar pf_x_lhs(const Partition& lambda, int n);
/// prod over cells of (1 - [x]_{-n+j-lambda'_{-n+j}}^{lambda_i-i}) / (1 - [x]_{j-lambda'_j}^{lambda_i-i}).
Scalar pf_x_rhs(const Partition& lambda, int n);

/// q^{|pi|} prod (1 - q^{n-i-k+1+lambda'_{-n+j+k-1}}) / (1 - q^{n-i-k+1+lambda'_{-n+j+k}}).
Scalar q_weight(const Partition& lambda, int n, const RppTable& pi);
/// weight_x with every x_l sent to q.
Scalar q_weight_specialized(const Partition& lambda, int n, const RppTable& pi);
/// Sum of q_weight over RPP(lambda, n).
Scalar q_lhs(const Partition& lambda, int n);
/// prod over cells of (1 - q^{lambda_i+lambda'_{j-n}-i-j+n+1}) / (1 - q^{lambda_i+lambda'_j-i-j+1}).
Scalar q_rhs(const Partition& lambda, int n);

/// Sum of q^{|pi|} over RPP(c^r, n).
Scalar macmahon_lhs(int r, int c, int n);
/// prod_{i<=r, j<=c, k<=n} (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2}).
Scalar macmahon_rhs(int r, int c, int n);

/// prod over cells of 1 / (1 - prod_{l=j-lambda'_j}^{lambda_i-i} x_l), to total degree D.
TruncatedSeries gansner_rhs_truncated(const Partition& lambda, int degree);
/// Sum of weight_x(lambda, n, pi) to total degree D, with n = D + r + c.
TruncatedSeries gansner_lhs_truncated(const Partition& lambda, int degree);
int gansner_bound(const Partition& lambda, int degree);

/// Sends every indexed x_l in s to q.
Scalar specialize_x_to_q(const Scalar& s);

/// Readings of the shape mu in the parameter substitution a, p_i, q_j.
enum class MuReading {
  Partition,           // mu = lambda
  Conjugate,           // mu = lambda'
  RotatedComplement,   // mu_k = c - lambda_{r+1-k}, mu'_j = r - lambda'_{c+1-j}
};

/// Closed-form solution with
///   a   = [x]_{c-lambda'_c}^{lambda_r-r}
///   p_i = [x]_{c-r+i-mu_i}^{c-r+i-mu_{i+1}}
///   q_j = [x]_{mu'_{j+1}-j-r+c}^{mu'_j-j-r+c}
TodaSolution mu_solution(const Partition& lambda, MuReading reading);
/// rpp_weight under mu_solution against weight_x for every pi in RPP(lambda, n).
Report mu_pathway_check(const Partition& lambda, int n, MuReading reading);

CheckResult macmahon_check(int r, int c, int n);
CheckResult product_x_check(const Partition& lambda, int n);
CheckResult q_check(const Partition& lambda, int n);
/// Multivariate comparison, and the same after x_l -> q.
CheckResult gansner_check(const Partition& lambda, int degree);
CheckResult gansner_q_check(const Partition& lambda, int degree);
CheckResult product_check(const Partition& lambda, int n, const SampleFunction& f);

}  // namespace toda_rpp
