#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <json.hpp>

#include "toda_rpp/algebra/scalar.hpp"
#include "toda_rpp/toda/rng.hpp"

namespace toda_rpp {

/// Rows [i0, i1] by columns [j0, j1].
struct GridWindow {
  int i0 = 0, i1 = 0;
  int j0 = 0, j1 = 0;

  int rows() const noexcept { return i1 - i0 + 1; }
  int cols() const noexcept { return j1 - j0 + 1; }
  bool contains(int i, int j) const noexcept { return i >= i0 && i <= i1 && j >= j0 && j <= j1; }
  friend bool operator==(const GridWindow&, const GridWindow&) = default;
};

/// Values f_{i,j} on a finite window, with memoized tau determinants.
class SampleFunction {
 public:
  SampleFunction(GridWindow window, std::vector<Scalar> row_major_values);
  static SampleFunction from_function(GridWindow window, const std::function<Scalar(int, int)>& f);
  /// Independent uniform integers in [1, 9].
  static SampleFunction random(GridWindow window, SeededRng& rng);

  const GridWindow& window() const noexcept { return window_; }
  /// Throws WindowError outside the window.
  const Scalar& at(int i, int j) const;

  /// det(f_{s+i, t+j})_{0 <= i, j < n}; 1 for n = 0. Throws WindowError when
  /// the block leaves the window.
  Scalar tau(int s, int t, int n) const;

  nlohmann::json to_json() const;
  static SampleFunction from_json(const nlohmann::json& j);

 private:
  struct Memo;

  GridWindow window_;
  std::vector<Scalar> values_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace toda_rpp
