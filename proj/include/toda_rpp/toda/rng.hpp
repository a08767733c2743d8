#pragma once

#include <cstdint>
#include <random>

namespace toda_rpp {

/// Seeded generator: std::mt19937_64 with modulo-free rejection for bounded
/// integers, so a seed fixes every draw on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// Value of TODA_RPP_MAX_RESAMPLE, default 100.
int max_resample();

}  // namespace toda_rpp
