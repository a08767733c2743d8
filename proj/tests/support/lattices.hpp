#pragma once

#include <vector>

#include "support/gen.hpp"
#include "toda_rpp/lattice/lattice.hpp"

namespace toda_rpp::testgen {

inline RegularLattice random_lattice(Gen& g, int max_rows, int max_width) {
  const int rows = g.uniform(2, max_rows);
  std::vector<int> profile(rows);
  int eta = g.uniform(0, max_width);
  for (int k = 0; k < rows; ++k) {
    profile[k] = eta;
    eta = std::max(0, eta - g.uniform(0, 2));
  }
  const int i_top = g.uniform(-2, 2);
  return RegularLattice(i_top, profile, profile.front() + g.uniform(1, 3));
}

inline std::vector<Point> lattice_points(const RegularLattice& L) {
  std::vector<Point> out;
  for (int i = L.i_top(); i <= L.i_bot(); ++i)
    for (int j = L.eta(i); j <= L.j_max(); ++j) out.push_back({i, j});
  return out;
}

inline RegularLattice quarter_plane(int rows, int cols) {
  return RegularLattice(0, std::vector<int>(rows, 0), cols - 1);
}

}  // namespace toda_rpp::testgen
