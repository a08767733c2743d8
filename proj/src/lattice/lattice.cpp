#include "toda_rpp/lattice/lattice.hpp"

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

std::string to_string(Point p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

RegularLattice::RegularLattice(int i_top, std::vector<int> profile, int j_max)
    : i_top_(i_top), profile_(std::move(profile)), j_max_(j_max) {
  if (profile_.empty()) throw ShapeError("lattice needs at least one row");
  for (std::size_t k = 0; k < profile_.size(); ++k) {
    if (k > 0 && profile_[k] > profile_[k - 1]) throw ShapeError("west profile must weakly decrease");
  }
  if (profile_.front() > j_max_) throw ShapeError("top row is empty within the column window");
}

int RegularLattice::eta(int i) const {
  if (i < i_top_ || i > i_bot()) throw DomainError("row " + std::to_string(i) + " outside the lattice window");
  return profile_[i - i_top_];
}

bool RegularLattice::contains(Point p) const {
  if (p.i < i_top_) return false;
  if (p.i > i_bot()) throw WindowError("row " + std::to_string(p.i) + " is below the lattice window");
  if (p.j > j_max_) throw WindowError("column " + std::to_string(p.j) + " is beyond the lattice window");
  return p.j >= profile_[p.i - i_top_];
}

nlohmann::json RegularLattice::to_json() const {
  return {{"rowWindow", {i_top_, i_bot()}}, {"profile", profile_}, {"colWindow", {j_min(), j_max_}}};
}

RegularLattice lattice_from_partition(const Partition& lambda, int margin) {
  if (margin < 0) throw DomainError("margin must be nonnegative");
  const int r = lambda.r();
  const int c = lambda.c();
  std::vector<int> profile;
  for (int i = 0; i <= r + margin; ++i) profile.push_back(i <= r ? c - lambda.part_ext(r - i) : 0);
  return RegularLattice(0, std::move(profile), c + margin);
}

BoundaryClass boundary_class(const RegularLattice& L, Point p) {
  if (!L.contains(p)) throw DomainError(to_string(p) + " is not in the lattice");
  return BoundaryClass{!L.contains({p.i, p.j - 1}), !L.contains({p.i - 1, p.j})};
}

int x_of(const RegularLattice& L, int j) {
  if (j > L.j_max() || j < L.j_min()) throw DomainError("column " + std::to_string(j) + " does not meet the lattice window");
  int i = L.i_top();
  while (L.eta(i) > j) ++i;
  return i;
}

int y_of(const RegularLattice& L, int i) { return L.eta(i); }

std::vector<Point> convex_corners(const RegularLattice& L) {
  std::vector<Point> out;
  for (int i = L.i_top(); i <= L.i_bot(); ++i) {
    const Point p{i, L.eta(i)};
    if (p.j <= L.j_max() && boundary_class(L, p).corner()) out.push_back(p);
  }
  return out;
}

RegularLattice delete_corner(const RegularLattice& L, Point p) {
  if (!L.contains(p) || !boundary_class(L, p).corner()) throw PreconditionError(to_string(p) + " is not a convex corner");
  if (p.j + 1 > L.j_max()) throw WindowError("deleting " + to_string(p) + " empties its row within the window");
  std::vector<int> profile = L.profile();
  profile[p.i - L.i_top()] += 1;
  return RegularLattice(L.i_top(), std::move(profile), L.j_max());
}

DiagonalEntry diagonal_entry(const RegularLattice& L, Point p) {
  if (!L.contains(p)) throw DomainError(to_string(p) + " is not in the lattice");
  DiagonalEntry d{p, 0};
  while (L.contains({d.entry.i - 1, d.entry.j - 1})) {
    d.entry = {d.entry.i - 1, d.entry.j - 1};
    ++d.distance;
  }
  return d;
}

}  // namespace toda_rpp
