#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toda_rpp/shapes/partition.hpp"

namespace toda_rpp {

/// Reverse plane partition of a shape with parts in [0, bound].
class RppTable {
 public:
  /// Throws ShapeError when the row lengths do not match the shape and
  /// DomainError when an entry is out of range or monotonicity fails.
  RppTable(Partition shape, int bound, const std::vector<std::vector<int>>& rows);
  static RppTable zeros(Partition shape, int bound);

  const Partition& shape() const noexcept { return shape_; }
  int bound() const noexcept { return bound_; }
  /// Entry pi_{i,j}, 1-based.
  int at(int i, int j) const { return entries_[offset_[i - 1] + j - 1]; }
  int at(Cell cell) const { return at(cell.i, cell.j); }
  std::vector<std::vector<int>> rows() const;

  /// Sum of pi_{i,j} over j - i = l.
  int trace(int l) const;
  int size() const;

  nlohmann::json to_json() const;
  friend bool operator==(const RppTable&, const RppTable&) = default;

 private:
  friend class RppEnumerator;
  RppTable(Partition shape, int bound);

  Partition shape_;
  int bound_ = 0;
  std::vector<int> offset_;
  std::vector<int> entries_;
};

/// Odometer over RPP(shape, n): row-major cells, each entry running from
/// max(left, above) to n. Yields tables in lexicographic order.
class RppEnumerator {
 public:
  RppEnumerator(Partition shape, int n);
  const RppTable& current() const noexcept { return table_; }
  /// Advances; false once every table has been produced.
  bool next();

 private:
  int lower_bound(std::size_t k) const;

  RppTable table_;
  std::vector<int> left_;   // flat index of the left neighbour or -1
  std::vector<int> above_;  // flat index of the upper neighbour or -1
};

void for_each_rpp(const Partition& shape, int n, const std::function<void(const RppTable&)>& visit);
std::vector<RppTable> enumerate_rpp(const Partition& shape, int n);
long long count_rpp(const Partition& shape, int n);
/// The tables of RPP(shape, n) with |pi| <= max_size, in the same order.
void for_each_rpp_up_to_size(const Partition& shape, int n, int max_size, const std::function<void(const RppTable&)>& visit);

}  // namespace toda_rpp
