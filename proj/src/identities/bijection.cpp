#include "toda_rpp/identities/bijection.hpp"

#include <set>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

namespace {

// Column of the north step of the shifted path in band a (rows a -> a-1), a = 1..r.
std::vector<int> north_columns(const LatticePath& shifted, int r) {
  std::vector<int> h(r + 1, 0);
  Point p = shifted.start;
  for (char step : shifted.steps) {
    if (step == 'N') {
      h[p.i] = p.j;
      --p.i;
    } else {
      ++p.j;
    }
  }
  return h;
}

}  // namespace

RppTable lp_to_rpp(const PathTuple& tuple, const Partition& lambda, int n) {
  if (n < 0) throw DomainError("negative bound");
  if (static_cast<int>(tuple.size()) != n) throw BijectionError("expected " + std::to_string(n) + " paths");
  const int r = lambda.r(), c = lambda.c();
  const RegularLattice L = lattice_from_partition(lambda, n);
  std::set<Point> seen;
  std::vector<std::vector<int>> h;
  for (int m = 0; m < n; ++m) {
    const LatticePath& path = tuple[m];
    const std::string label = "path " + std::to_string(m);
    if (path.start != Point{r + m, m}) throw BijectionError(label + " must start at " + to_string({r + m, m}));
    std::vector<Point> pts;
    try {
      pts = path.points();
      for (Point p : pts) {
        if (p.i > L.i_bot() || p.j > L.j_max() || !L.contains(p)) throw BijectionError(label + " leaves the lattice at " + to_string(p));
      }
    } catch (const DomainError& e) {
      throw BijectionError(label + ": " + e.what());
    }
    if (pts.back() != Point{m, c + m}) throw BijectionError(label + " must end at " + to_string({m, c + m}));
    for (Point p : pts) {
      if (!seen.insert(p).second) throw BijectionError("paths intersect at " + to_string(p));
    }
    h.push_back(north_columns(LatticePath{{r, 0}, path.steps}, r));
  }
  std::vector<std::vector<int>> rows(r);
  for (int i = 1; i <= r; ++i) rows[i - 1].assign(lambda.part_ext(i), 0);
  for (int a = 1; a <= r; ++a) {
    for (int b = L.eta(a - 1) + 1; b <= c; ++b) {
      int value = 0;
      for (int m = 0; m < n; ++m) value += h[m][a] >= b;
      rows[r - a][c - b] = value;
    }
  }
  try {
    return RppTable(lambda, n, rows);
  } catch (const Error& e) {
    throw BijectionError(std::string("tuple does not give a reverse plane partition: ") + e.what());
  }
}

PathTuple rpp_to_lp(const RppTable& pi, const Partition& lambda, int n) {
  if (!(pi.shape() == lambda)) throw BijectionError("filling has shape " + pi.shape().to_string());
  if (n < 0) throw DomainError("negative bound");
  for (Cell cell : lambda.cells()) {
    if (pi.at(cell) > n) throw BijectionError("entry exceeds bound " + std::to_string(n));
  }
  const int r = lambda.r(), c = lambda.c();
  const RegularLattice L = lattice_from_partition(lambda, n);
  PathTuple tuple;
  for (int m = 0; m < n; ++m) {
    std::string steps;
    int col = 0;
    for (int a = r; a >= 1; --a) {
      int h = L.eta(a - 1);
      for (int b = L.eta(a - 1) + 1; b <= c; ++b) h += pi.at(r + 1 - a, c + 1 - b) >= n - m;
      if (h < col) throw BijectionError("filling is not monotone");
      steps.append(h - col, 'E');
      steps.push_back('N');
      col = h;
    }
    steps.append(c - col, 'E');
    tuple.push_back(LatticePath{{r + m, m}, steps});
  }
  return tuple;
}

}  // namespace toda_rpp
