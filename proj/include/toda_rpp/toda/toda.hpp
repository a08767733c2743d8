#pragma once

#include <string>

#include "toda_rpp/algebra/bracket.hpp"
#include "toda_rpp/errors.hpp"
#include "toda_rpp/lattice/lattice.hpp"
#include "toda_rpp/toda/report.hpp"
#include "toda_rpp/toda/rng.hpp"
#include "toda_rpp/toda/sample.hpp"
#include "toda_rpp/toda/solution.hpp"

namespace toda_rpp {

/// a and b from the tau functions of f:
///   a(s,t,n) = tau(s+1,t,n+1) tau(s,t,n) / (tau(s+1,t,n) tau(s,t,n+1))
///   b(s,t,n) = tau(s,t+1,n-1) tau(s,t,n+1) / (tau(s,t+1,n) tau(s,t,n))
/// Evaluation throws SingularMinor when one of the four minors vanishes.
TodaSolution ab_from_f(const SampleFunction& f);

/// a(s,t,n) = [p]_{s+1}^{s+n} (1 - a [p]_1^s [q]_1^{t+n})
/// b(s,t,n) = a [p]_1^{s+n-1} [q]_1^t (1 - [q]_{t+1}^{t+n})
/// Evaluation throws NonvanishingViolation on a zero value.
TodaSolution closed_form_apq(const Scalar& a, IndexedFamily p, IndexedFamily q,
                             BracketConvention conv = BracketConvention::Telescoping);

/// Checks, for every site of the window,
///   a(s,t+1,n) + b(s+1,t,n) = a(s,t,n) + b(s,t,n+1)
///   a(s,t+1,n) b(s+1,t,n+1) = a(s,t,n+1) b(s,t,n+1)
Report verify_evolution(const TodaSolution& sol, const SiteWindow& window);

/// Checks tau(s+1,t+1,n-1) tau(s,t,n+1) + tau(s+1,t,n) tau(s,t+1,n) = tau(s+1,t+1,n) tau(s,t,n)
/// for every site of the window with n >= 1.
Report verify_bilinear(const SampleFunction& f, const SiteWindow& window);

/// f_{i,j} -> phi_j f_{i,j}. Throws GaugeError on a zero phi_j.
SampleFunction gauge(const SampleFunction& f, const IndexedFamily& phi);

/// Rows [i_top, i_bot + 1] and columns [j_min, j_max]: enough for every edge
/// weight and tau minor consumed by the lattice checks on L.
GridWindow sample_window_for(const RegularLattice& L);

/// f(i,j) / f(x(j),j) against g from (i, y(i)) to (x(j), j).
Report fundamental_check(const SampleFunction& f, const RegularLattice& L, Point p);

/// g on L against g on L with the convex corner removed, for endpoints off
/// the corner's diagonal.
Report corner_deletion_check(const TodaSolution& sol, const RegularLattice& L, Point corner, Point from, Point to);

/// Random lattice with 2..max_rows profile rows, profile values in [0, max_width]
/// dropping by at most 2 per row, and 1..3 extra columns.
RegularLattice random_lattice(SeededRng& rng, int max_rows, int max_width);

struct NiSums {
  Scalar det_ratio;  // tau(s,t,n) / tau(x(t),t,n)
  Scalar path_sum;   // sum over non-intersecting tuples
  Scalar product;    // prod_{i=1}^{s-x(t)} prod_{k=1}^{n} a(s-i,t,k-1)
};
NiSums ni_sums(const SampleFunction& f, const RegularLattice& L, int s, int t, int n);
Report ni_sum_check(const SampleFunction& f, const RegularLattice& L, int s, int t, int n);

/// Runs attempt(rng) until it does not throw DegenerateSolution, at most
/// 1 + max_resample() times; then throws ResampleExhausted.
template <class F>
auto with_resample(SeededRng& rng, F&& attempt) -> decltype(attempt(rng)) {
  const int limit = max_resample();
  for (int k = 0;; ++k) {
    try {
      return attempt(rng);
    } catch (const DegenerateSolution& e) {
      if (k >= limit) throw ResampleExhausted(std::string("no usable sample after resampling: ") + e.what());
    }
  }
}

}  // namespace toda_rpp
