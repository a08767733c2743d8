#include "toda_rpp/algebra/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge of two descending term lists, b scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->mono > i->mono) {
      out.push_back(Term{j->mono, sign > 0 ? j->coeff : mpq_class(-j->coeff)});
      ++j;
    } else {
      mpq_class c = sign > 0 ? mpq_class(i->coeff + j->coeff) : mpq_class(i->coeff - j->coeff);
      if (c != 0) out.push_back(Term{i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, mpq_class(c)});
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

LaurentPoly LaurentPoly::variable(Variable v, int exp) { return monomial(Monomial::of(v, exp)); }

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpq_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool LaurentPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff == 1;
}

bool LaurentPoly::has_negative_exponent() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.has_negative_exponent(); });
}

mpq_class LaurentPoly::constant_term() const {
  for (const auto& t : terms_) {
    if (t.mono.is_one()) return t.coeff;
  }
  return 0;
}

std::vector<Variable> LaurentPoly::variables() const {
  std::vector<Variable> vars;
  for (const auto& t : terms_) {
    for (const auto& p : t.mono.powers()) vars.push_back(p.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

int LaurentPoly::degree_in(Variable v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

int LaurentPoly::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.mono.total_degree();
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

Monomial LaurentPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (std::size_t k = 1; k < terms_.size(); ++k) m = Monomial::meet(m, terms_[k].mono);
  return m;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(b.terms_.front().mono).scaled(b.terms_.front().coeff);
  if (a.is_monomial()) return b.shifted(a.terms_.front().mono).scaled(a.terms_.front().coeff);
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() <= 8) {
    std::vector<Term> acc;
    for (const auto& t : small.terms_) acc = merge(acc, large.shifted(t.mono).scaled(t.coeff).terms_, 1);
    LaurentPoly out;
    out.terms_ = std::move(acc);
    return out;
  }
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
  }
  return LaurentPoly::from_terms(std::move(products));
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  LaurentPoly out = *this;
  if (c == 1) return out;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly out = *this;
  if (m.is_one()) return out;
  // Multiplying by a monomial preserves the order of terms.
  for (auto& t : out.terms_) t.mono = t.mono * m;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::truncated(int max_degree) const {
  LaurentPoly out;
  for (const auto& t : terms_) {
    if (t.mono.total_degree() <= max_degree) out.terms_.push_back(t);
  }
  return out;
}

std::map<int, LaurentPoly> LaurentPoly::coefficients_in(Variable v) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back(Term{t.mono.without(v), t.coeff});
  std::map<int, LaurentPoly> out;
  for (auto& [k, ts] : buckets) out.emplace(k, from_terms(std::move(ts)));
  return out;
}

LaurentPoly LaurentPoly::coefficient_in(Variable v, int k) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) == k) ts.push_back(Term{t.mono.without(v), t.coeff});
  }
  return from_terms(std::move(ts));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string term;
    if (it->mono.is_one()) {
      term = it->coeff.get_str();
    } else if (it->coeff == 1) {
      term = it->mono.to_string();
    } else if (it->coeff == -1) {
      term = "-" + it->mono.to_string();
    } else {
      term = it->coeff.get_str() + "*" + it->mono.to_string();
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].coeff != b.terms_[k].coeff || !(a.terms_[k].mono == b.terms_[k].mono)) return false;
  }
  return true;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    const Term& t = b.leading_term();
    return a.shifted(t.mono.inverse()).scaled(1 / t.coeff);
  }
  // Units of the Laurent ring are monomials, so divide the polynomial parts.
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  LaurentPoly rem = a.shifted(ma.inverse());
  LaurentPoly den = b.shifted(mb.inverse());
  for (Variable v : den.variables()) {
    if (den.degree_in(v) > rem.degree_in(v)) return std::nullopt;
  }
  if (den.total_degree() > rem.total_degree()) return std::nullopt;

  const Term lead = den.leading_term();
  const mpq_class lead_inv = 1 / lead.coeff;
  std::map<Monomial, mpq_class, std::greater<>> work;
  for (const auto& t : rem.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!work.empty()) {
    auto top = work.begin();
    if (!lead.mono.divides(top->first)) return std::nullopt;
    Term q{top->first * lead.mono.inverse(), top->second * lead_inv};
    work.erase(top);
    for (auto t = std::next(den.terms().begin()); t != den.terms().end(); ++t) {
      auto [it, fresh] = work.try_emplace(t->mono * q.mono, 0);
      it->second -= t->coeff * q.coeff;
      if (it->second == 0) work.erase(it);
    }
    quotient.push_back(std::move(q));
  }
  // Quotient terms were produced in decreasing order.
  LaurentPoly out = LaurentPoly::from_terms(std::move(quotient));
  return out.shifted(ma * mb.inverse());
}

}  // namespace toda_rpp
