#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace toda_rpp {

/// A formal variable: a lowercase family name of at most four letters,
/// either plain (`q`, `a`) or carrying an integer index (`x[-2]`, `p[3]`).
///
/// Variables order lexicographically by family, then plain before indexed,
/// then by index. The ordering is encoded in a single 64-bit key so that
/// comparisons in monomial arithmetic are one integer compare.
class Variable {
 public:
  static constexpr int kMaxIndex = (1 << 30);

  explicit Variable(std::string_view family);
  Variable(std::string_view family, int index);

  std::string family() const;
  bool indexed() const noexcept { return (key_ & 0xffffffffULL) != 0; }
  int index() const noexcept;
  std::uint64_t key() const noexcept { return key_; }
  std::string to_string() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  static std::uint64_t pack_family(std::string_view family);

  std::uint64_t key_ = 0;
};

}  // namespace toda_rpp
