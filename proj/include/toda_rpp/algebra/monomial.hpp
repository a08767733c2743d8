#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <span>
#include <string>

#include "toda_rpp/algebra/variable.hpp"

namespace toda_rpp {

struct Power {
  Variable var;
  int exp;

  friend bool operator==(const Power&, const Power&) = default;
};

/// A Laurent monomial: a product of variable powers with nonzero (possibly
/// negative) exponents, kept sorted by variable with no zero exponents.
///
/// The total order is lexicographic with the smallest variable most
/// significant; it is a term order on monomials with nonnegative exponents.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Power, 8>;

  Monomial() = default;
  static Monomial of(Variable v, int exp = 1);

  std::span<const Power> powers() const noexcept { return {powers_.data(), powers_.size()}; }
  bool is_one() const noexcept { return powers_.empty(); }
  std::size_t size() const noexcept { return powers_.size(); }
  int exponent(Variable v) const noexcept;
  int total_degree() const noexcept;
  bool has_negative_exponent() const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int e) const;
  /// Removes `v` entirely.
  Monomial without(Variable v) const;
  /// Componentwise minimum of exponents (absent variables count as 0).
  static Monomial meet(const Monomial& a, const Monomial& b);
  /// True when every exponent of `*this` is <= the matching exponent of `other`.
  bool divides(const Monomial& other) const noexcept;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.powers_ == b.powers_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  void push(Variable v, int exp) { powers_.push_back(Power{v, exp}); }

  Storage powers_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace toda_rpp
