#pragma once

#include <cstdint>

namespace matchpd {

// Counter-based mixing (splitmix64 finalizer). Streams are a pure function
// of (seed, counters), so parallel trial execution cannot change any drawn
// value and results stay bit-identical across thread counts.
inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t substream(uint64_t seed, uint64_t a) { return mix64(seed ^ mix64(a + 1)); }

inline uint64_t substream(uint64_t seed, uint64_t a, uint64_t b) {
  return mix64(substream(seed, a) ^ mix64(b + 0x9E3779B97F4A7C15ull));
}

// uniform double in [0, 1), 53 mantissa bits
inline double to_unit_double(uint64_t x) { return (double)(x >> 11) * 0x1.0p-53; }

// Sequential generator over the same mixer, for instance generation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }
  // uniform in [lo, hi] by rejection-free modulo (bias is irrelevant at our
  // range sizes but keep ranges tiny anyway)
  long long uniform_int(long long lo, long long hi) {
    return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
  }
  double uniform01() { return to_unit_double(next()); }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  uint64_t state_;
};

}  // namespace matchpd
