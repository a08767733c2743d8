#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

#include "toda_rpp/shapes/partition.hpp"

namespace toda_rpp {

/// Matrix coordinates: i grows southward, j eastward.
struct Point {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(Point p);

struct BoundaryClass {
  bool west = false;
  bool north = false;
  bool corner() const noexcept { return west && north; }
  bool interior() const noexcept { return !west && !north; }
};

/// Regular subset of Z^2 with a weakly decreasing west profile eta, seen
/// through the finite window rows [i_top, i_bot], columns <= j_max.
///
/// (i, j) is in L iff i_top <= i and eta(i) <= j. Rows above i_top are empty;
/// rows below i_bot and columns beyond j_max are unknown and raise WindowError.
class RegularLattice {
 public:
  /// profile[k] = eta(i_top + k). Throws ShapeError if the profile increases
  /// or some row is empty within the window.
  RegularLattice(int i_top, std::vector<int> profile, int j_max);

  int i_top() const noexcept { return i_top_; }
  int i_bot() const noexcept { return i_top_ + static_cast<int>(profile_.size()) - 1; }
  int j_min() const noexcept { return profile_.back(); }
  int j_max() const noexcept { return j_max_; }
  const std::vector<int>& profile() const noexcept { return profile_; }

  /// Throws DomainError outside the row window.
  int eta(int i) const;
  bool contains(Point p) const;

  nlohmann::json to_json() const;
  friend bool operator==(const RegularLattice&, const RegularLattice&) = default;

 private:
  int i_top_;
  std::vector<int> profile_;
  int j_max_;
};

/// L(lambda): rows 0..r+margin, eta(i) = c - lambda_{r-i} for i <= r and 0
/// below, columns up to c + margin.
RegularLattice lattice_from_partition(const Partition& lambda, int margin);

/// Throws DomainError when p is not in L.
BoundaryClass boundary_class(const RegularLattice& L, Point p);

/// min{i : (i, j) in L}. Throws DomainError when column j is outside the window.
int x_of(const RegularLattice& L, int j);
/// eta(i).
int y_of(const RegularLattice& L, int i);

/// Convex corners of L in row order.
std::vector<Point> convex_corners(const RegularLattice& L);

/// Removes a convex corner; throws PreconditionError if p is not one.
RegularLattice delete_corner(const RegularLattice& L, Point p);

/// Northwest end of the diagonal through p, and its distance from p.
struct DiagonalEntry {
  Point entry;
  int distance = 0;
};
DiagonalEntry diagonal_entry(const RegularLattice& L, Point p);

}  // namespace toda_rpp
