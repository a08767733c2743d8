#include "toda_rpp/shapes/rpp.hpp"

#include <algorithm>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

RppTable::RppTable(Partition shape, int bound) : shape_(std::move(shape)), bound_(bound) {
  if (bound < 0) throw DomainError("RPP bound must be nonnegative");
  int total = 0;
  for (int part : shape_.parts()) {
    offset_.push_back(total);
    total += part;
  }
  entries_.assign(total, 0);
}

RppTable::RppTable(Partition shape, int bound, const std::vector<std::vector<int>>& rows)
    : RppTable(std::move(shape), bound) {
  if (static_cast<int>(rows.size()) != shape_.r()) throw ShapeError("row count does not match shape " + shape_.to_string());
  for (int i = 1; i <= shape_.r(); ++i) {
    const auto& row = rows[i - 1];
    if (static_cast<int>(row.size()) != shape_.part_ext(i)) {
      throw ShapeError("row " + std::to_string(i) + " length does not match shape " + shape_.to_string());
    }
    for (int j = 1; j <= shape_.part_ext(i); ++j) {
      const int v = row[j - 1];
      if (v < 0 || v > bound_) throw DomainError("entry out of [0, " + std::to_string(bound_) + "] at cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if ((j > 1 && row[j - 2] > v) || (i > 1 && rows[i - 2][j - 1] > v)) {
        throw DomainError("rows and columns must weakly increase at cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      entries_[offset_[i - 1] + j - 1] = v;
    }
  }
}

RppTable RppTable::zeros(Partition shape, int bound) { return RppTable(std::move(shape), bound); }

std::vector<std::vector<int>> RppTable::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= shape_.r(); ++i) {
    auto first = entries_.begin() + offset_[i - 1];
    out.emplace_back(first, first + shape_.part_ext(i));
  }
  return out;
}

int RppTable::trace(int l) const {
  int total = 0;
  for (int i = 1; i <= shape_.r(); ++i) {
    const int j = i + l;
    if (j >= 1 && j <= shape_.part_ext(i)) total += at(i, j);
  }
  return total;
}

int RppTable::size() const {
  int total = 0;
  for (int v : entries_) total += v;
  return total;
}

nlohmann::json RppTable::to_json() const { return nlohmann::json(rows()); }

RppEnumerator::RppEnumerator(Partition shape, int n) : table_(std::move(shape), n) {
  const Partition& lambda = table_.shape();
  for (int i = 1; i <= lambda.r(); ++i) {
    for (int j = 1; j <= lambda.part_ext(i); ++j) {
      left_.push_back(j > 1 ? table_.offset_[i - 1] + j - 2 : -1);
      above_.push_back(i > 1 ? table_.offset_[i - 2] + j - 1 : -1);
    }
  }
}

int RppEnumerator::lower_bound(std::size_t k) const {
  int lo = 0;
  if (left_[k] >= 0) lo = std::max(lo, table_.entries_[left_[k]]);
  if (above_[k] >= 0) lo = std::max(lo, table_.entries_[above_[k]]);
  return lo;
}

bool RppEnumerator::next() {
  auto& e = table_.entries_;
  std::size_t k = e.size();
  while (k > 0 && e[k - 1] == table_.bound_) --k;
  if (k == 0) return false;
  ++e[k - 1];
  for (std::size_t m = k; m < e.size(); ++m) e[m] = lower_bound(m);
  return true;
}

void for_each_rpp(const Partition& shape, int n, const std::function<void(const RppTable&)>& visit) {
  RppEnumerator it(shape, n);
  do {
    visit(it.current());
  } while (it.next());
}

std::vector<RppTable> enumerate_rpp(const Partition& shape, int n) {
  std::vector<RppTable> out;
  for_each_rpp(shape, n, [&](const RppTable& t) { out.push_back(t); });
  return out;
}

long long count_rpp(const Partition& shape, int n) {
  long long count = 0;
  for_each_rpp(shape, n, [&](const RppTable&) { ++count; });
  return count;
}

void for_each_rpp_up_to_size(const Partition& shape, int n, int max_size, const std::function<void(const RppTable&)>& visit) {
  const std::vector<Cell> cells = shape.cells();
  std::vector<std::vector<int>> rows;
  for (int part : shape.parts()) rows.emplace_back(part, 0);
  std::function<void(std::size_t, int)> place = [&](std::size_t k, int budget) {
    if (k == cells.size()) {
      visit(RppTable(shape, n, rows));
      return;
    }
    const Cell cell = cells[k];
    int lo = 0;
    if (cell.j > 1) lo = std::max(lo, rows[cell.i - 1][cell.j - 2]);
    if (cell.i > 1) lo = std::max(lo, rows[cell.i - 2][cell.j - 1]);
    for (int v = lo; v <= std::min(n, budget); ++v) {
      rows[cell.i - 1][cell.j - 1] = v;
      place(k + 1, budget - v);
    }
    rows[cell.i - 1][cell.j - 1] = 0;
  };
  if (max_size >= 0) place(0, max_size);
}

}  // namespace toda_rpp
