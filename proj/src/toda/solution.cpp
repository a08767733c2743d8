#include "toda_rpp/toda/solution.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

std::string site_name(const char* field, int s, int t, int n) {
  return std::string(field) + "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(n) + ")";
}

struct TodaSolution::Cache {
  std::mutex mutex;
  std::map<std::tuple<int, int, int, int>, Scalar> values;
};

TodaSolution::TodaSolution(Field a, Field b, std::optional<SiteWindow> window)
    : a_(std::move(a)), b_(std::move(b)), window_(window), cache_(std::make_shared<Cache>()) {}

void TodaSolution::require_site(const char* field, int s, int t, int n) const {
  if (n < 0) throw DomainError("negative subscript at " + site_name(field, s, t, n));
  if (window_ && !window_->contains(s, t, n)) throw WindowError(site_name(field, s, t, n) + " is outside the solution window");
}

namespace {

Scalar cached(std::mutex& mutex, std::map<std::tuple<int, int, int, int>, Scalar>& values, std::tuple<int, int, int, int> key,
              const std::function<Scalar()>& compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = values.find(key);
    if (it != values.end()) return it->second;
  }
  Scalar v = compute();
  std::lock_guard<std::mutex> lock(mutex);
  return values.emplace(key, std::move(v)).first->second;
}

}  // namespace

Scalar TodaSolution::a(int s, int t, int n) const {
  require_site("a", s, t, n);
  return cached(cache_->mutex, cache_->values, {0, s, t, n}, [&] { return a_(s, t, n); });
}

Scalar TodaSolution::b(int s, int t, int n) const {
  require_site("b", s, t, n);
  if (n == 0) return Scalar();
  return cached(cache_->mutex, cache_->values, {1, s, t, n}, [&] { return b_(s, t, n); });
}

}  // namespace toda_rpp
