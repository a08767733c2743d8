#pragma once

#include "toda_rpp/lattice/paths.hpp"
#include "toda_rpp/shapes/rpp.hpp"

namespace toda_rpp {

/// Non-intersecting tuple on L(lambda) to a filling: shift P_k by (-k,-k),
/// fill the cells between P_{n-k-1} and P_{n-k} with k, rotate by 180 degrees.
/// Throws BijectionError for a tuple with wrong endpoints, steps outside
/// L(lambda), or intersecting paths.
RppTable lp_to_rpp(const PathTuple& tuple, const Partition& lambda, int n);

/// Inverse of lp_to_rpp. Throws BijectionError if pi is not in RPP(lambda, n).
PathTuple rpp_to_lp(const RppTable& pi, const Partition& lambda, int n);

}  // namespace toda_rpp
