#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "toda_rpp/algebra/scalar.hpp"

namespace toda_rpp {

/// Box of sites (s, t, n) with lo <= hi on each axis.
struct SiteWindow {
  int s_lo = 0, s_hi = 0;
  int t_lo = 0, t_hi = 0;
  int n_lo = 0, n_hi = 0;

  bool contains(int s, int t, int n) const noexcept {
    return s >= s_lo && s <= s_hi && t >= t_lo && t <= t_hi && n >= n_lo && n <= n_hi;
  }
};

std::string site_name(const char* field, int s, int t, int n);

/// Evaluators of a^{(s,t)}_n and b^{(s,t)}_n.
///
/// b(s,t,0) is 0 without consulting the evaluator. Values are cached; copies
/// share the cache, which is safe to fill from several threads.
class TodaSolution {
 public:
  using Field = std::function<Scalar(int s, int t, int n)>;

  /// Without a window every site with n >= 0 is accepted.
  TodaSolution(Field a, Field b, std::optional<SiteWindow> window = std::nullopt);

  /// Throws WindowError outside the declared window, DomainError for n < 0.
  Scalar a(int s, int t, int n) const;
  Scalar b(int s, int t, int n) const;
  const std::optional<SiteWindow>& window() const noexcept { return window_; }

 private:
  struct Cache;

  void require_site(const char* field, int s, int t, int n) const;

  Field a_;
  Field b_;
  std::optional<SiteWindow> window_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace toda_rpp
