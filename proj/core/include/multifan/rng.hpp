#ifndef MULTIFAN_RNG_HPP
#define MULTIFAN_RNG_HPP

#include <cstdint>

namespace multifan {

/// splitmix64 generator.  Sampling must be reproducible byte-for-byte across
/// platforms, so we do not rely on std::uniform_int_distribution.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n).  Modulo bias is irrelevant here; determinism
  /// is what matters.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

/// Derives the seed for sample #stream from a master seed.  Samples drawn
/// from derived seeds are order-independent, so sampling loops can be
/// evaluated in any order (or concurrently) with identical results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  Rng r(master ^ (0xA0761D6478BD642Full * (stream + 1)));
  return r.next();
}

}  // namespace multifan

#endif  // MULTIFAN_RNG_HPP
