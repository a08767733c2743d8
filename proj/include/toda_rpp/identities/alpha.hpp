#pragma once

#include "toda_rpp/shapes/rpp.hpp"
#include "toda_rpp/toda/sample.hpp"
#include "toda_rpp/toda/solution.hpp"

namespace toda_rpp {

/// alpha_{u,v} for shape lambda and bound n:
///   alpha_{i+k, lambda_i+k}      = a^{(r-i, c-lambda_i)}_{n-k-1}
///   alpha_{lambda'_j+k, j+k-1}   = b^{(r-lambda'_j, c-j)}_{n-k}
/// for k < n. The clause is chosen by the diagonal v - u.
/// Throws UndefinedAlpha when no clause matches and RangeError when k >= n.
Scalar alpha(const Partition& lambda, int n, const TodaSolution& sol, int u, int v);

/// Which clause defines the diagonal l = v - u: +i for the row clause of row
/// i, -j for the column clause of column j, 0 if none.
int alpha_clause(const Partition& lambda, int l);

/// prod over cells of prod_{k=1}^{pi_{i,j}} alpha_{i+k-1, j+k-2} / alpha_{i+k-1, j+k-1}.
/// Throws WeightError naming the cell when an alpha is undefined or zero.
Scalar rpp_weight(const Partition& lambda, int n, const TodaSolution& sol, const RppTable& pi);

/// A sample window on which ab_from_f evaluates every field value consumed
/// by the shape-level checks for (lambda, n).
GridWindow sample_window_for(const Partition& lambda, int n);

}  // namespace toda_rpp
