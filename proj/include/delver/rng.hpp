#ifndef DELVER_RNG_HPP
#define DELVER_RNG_HPP

#include <cstdint>

namespace delver {

// splitmix64 finalizer. Used both as the core generator step and to derive
// substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic, platform-independent random stream (splitmix64).
///
/// Every stochastic operation takes one of these explicitly; nothing in the
/// library reads global RNG state. Uniform doubles are built from the high
/// 53 bits, so sequences are bit-identical across compilers and platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    return mix64(z);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  /// Uniform double in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  bool next_bernoulli(double p) { return next_unit() < p; }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection sampling on the top bits; bias-free and portable.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
};

// Stream purposes. Substreams are keyed by (root seed, purpose, a, b) so that
// e.g. changing the population size never perturbs another agent's draws.
enum class StreamPurpose : std::uint64_t {
  Theta = 1,        // per (agent, episode) reliability draw
  Outcome = 2,      // per (agent, episode) outcome noise
  Detect = 3,       // per (agent, episode) error-detection draw
  Transition = 4,   // per (agent, episode) stochastic transition
  Audit = 5,        // per (agent, episode) audit draw
  Graph = 6,        // graph generation (rewiring)
  Sweep = 7,        // per-sweep-point derived seeds
  Generic = 8,
};

/// Derive an independent substream seed from a root seed and two indices.
/// This is the documented counter scheme used by the scenario engine.
inline std::uint64_t substream_seed(std::uint64_t root, StreamPurpose purpose,
                                    std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t h = mix64(root + 0x9E3779B97F4A7C15ull);
  h = mix64(h ^ (static_cast<std::uint64_t>(purpose) * 0xBF58476D1CE4E5B9ull));
  h = mix64(h ^ mix64(a + 0x94D049BB133111EBull));
  h = mix64(h ^ mix64(b + 0xD6E8FEB86659FD93ull));
  return h;
}

inline RngStream substream(std::uint64_t root, StreamPurpose purpose,
                           std::uint64_t a, std::uint64_t b = 0) {
  return RngStream(substream_seed(root, purpose, a, b));
}

}  // namespace delver

#endif
