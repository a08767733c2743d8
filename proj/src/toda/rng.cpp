#include "toda_rpp/toda/rng.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

int SeededRng::uniform_int(int lo, int hi) {
  if (hi < lo) throw DomainError("empty range for uniform_int");
  const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t u;
  do {
    u = engine_();
  } while (u > limit);
  return lo + static_cast<int>(u % span);
}

int max_resample() {
  const char* env = std::getenv("TODA_RPP_MAX_RESAMPLE");
  if (env == nullptr || *env == '\0') return 100;
  try {
    int v = std::stoi(env);
    if (v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(std::string("TODA_RPP_MAX_RESAMPLE must be a nonnegative integer, got \"") + env + "\"");
}

}  // namespace toda_rpp
