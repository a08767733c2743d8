#include "toda_rpp/algebra/monomial.hpp"

#include <algorithm>

namespace toda_rpp {

Monomial Monomial::of(Variable v, int exp) {
  Monomial m;
  if (exp != 0) m.push(v, exp);
  return m;
}

int Monomial::exponent(Variable v) const noexcept {
  for (const auto& p : powers_) {
    if (p.var == v) return p.exp;
    if (v < p.var) break;
  }
  return 0;
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (const auto& p : powers_) d += p.exp;
  return d;
}

bool Monomial::has_negative_exponent() const noexcept {
  return std::any_of(powers_.begin(), powers_.end(), [](const Power& p) { return p.exp < 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->var < b->var)) {
      out.push(a->var, a->exp);
      ++a;
    } else if (a == powers_.end() || b->var < a->var) {
      out.push(b->var, b->exp);
      ++b;
    } else {
      int e = a->exp + b->exp;
      if (e != 0) out.push(a->var, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial out;
  if (e == 0) return out;
  for (const auto& p : powers_) out.push(p.var, p.exp * e);
  return out;
}

Monomial Monomial::without(Variable v) const {
  Monomial out;
  for (const auto& p : powers_) {
    if (p.var != v) out.push(p.var, p.exp);
  }
  return out;
}

Monomial Monomial::meet(const Monomial& x, const Monomial& y) {
  Monomial out;
  auto a = x.powers_.begin();
  auto b = y.powers_.begin();
  while (a != x.powers_.end() || b != y.powers_.end()) {
    if (b == y.powers_.end() || (a != x.powers_.end() && a->var < b->var)) {
      if (a->exp < 0) out.push(a->var, a->exp);
      ++a;
    } else if (a == x.powers_.end() || b->var < a->var) {
      if (b->exp < 0) out.push(b->var, b->exp);
      ++b;
    } else {
      int e = std::min(a->exp, b->exp);
      if (e != 0) out.push(a->var, e);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->var < b->var)) {
      if (a->exp > 0) return false;
      ++a;
    } else if (a == powers_.end() || b->var < a->var) {
      if (b->exp < 0) return false;
      ++b;
    } else {
      if (a->exp > b->exp) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& p : powers_) {
    h ^= std::hash<std::uint64_t>{}(p.var.key()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<int>{}(p.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& p : powers_) {
    if (!out.empty()) out += "*";
    out += p.var.to_string();
    if (p.exp != 1) out += "^" + std::to_string(p.exp);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) noexcept {
  auto a = x.powers_.begin();
  auto b = y.powers_.begin();
  while (a != x.powers_.end() || b != y.powers_.end()) {
    if (b == y.powers_.end() || (a != x.powers_.end() && a->var < b->var)) {
      return a->exp <=> 0;
    }
    if (a == x.powers_.end() || b->var < a->var) {
      return 0 <=> b->exp;
    }
    if (a->exp != b->exp) return a->exp <=> b->exp;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

}  // namespace toda_rpp
