#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace toda_rpp {

/// A cell (i, j) of a Young diagram, 1-based.
struct Cell {
  int i = 1;
  int j = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition lambda_1 >= ... >= lambda_r > 0 with c = lambda_1.
class Partition {
 public:
  Partition() = default;
  /// Throws ShapeError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// "5,4,4,2,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int r() const noexcept { return static_cast<int>(parts_.size()); }
  int c() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_i for 1 <= i <= r, c for i <= 0, 0 for i > r.
  int part_ext(int i) const noexcept;
  /// lambda'_j for 1 <= j <= c, r for j <= 0, 0 for j > c.
  int conj_ext(int j) const noexcept;

  Partition conjugate() const;
  bool contains(Cell cell) const noexcept;
  /// Cells in row-major order.
  std::vector<Cell> cells() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of k, in reverse lexicographic order.
std::vector<Partition> partitions_of(int k);
/// All partitions with at most max_cells cells, the empty one included.
std::vector<Partition> partitions_up_to(int max_cells);

}  // namespace toda_rpp
