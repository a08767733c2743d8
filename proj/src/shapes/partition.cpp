#include "toda_rpp/shapes/partition.hpp"

#include <charconv>
#include <numeric>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw ShapeError("partition parts must be positive: " + to_string());
    if (k > 0 && parts_[k] > parts_[k - 1]) throw ShapeError("partition parts must weakly decrease: " + to_string());
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  if (pos == text.size()) return Partition();
  for (;;) {
    skip();
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("bad shape \"" + std::string(text) + "\"");
    pos = static_cast<std::size_t>(end - text.data());
    parts.push_back(value);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("bad shape \"" + std::string(text) + "\"");
    ++pos;
  }
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw ShapeError("negative rectangle dimension");
  if (rows == 0 || cols == 0) return Partition();
  return Partition(std::vector<int>(rows, cols));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part_ext(int i) const noexcept {
  if (i <= 0) return c();
  if (i > r()) return 0;
  return parts_[i - 1];
}

int Partition::conj_ext(int j) const noexcept {
  if (j <= 0) return r();
  int count = 0;
  while (count < r() && parts_[count] >= j) ++count;
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 1; j <= c(); ++j) out.push_back(conj_ext(j));
  return Partition(std::move(out));
}

bool Partition::contains(Cell cell) const noexcept {
  return cell.i >= 1 && cell.i <= r() && cell.j >= 1 && cell.j <= parts_[cell.i - 1];
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= r(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back(Cell{i, j});
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> prefix;
  partitions_rec(k, k, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_cells) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_cells; ++k) {
    auto part = partitions_of(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace toda_rpp
