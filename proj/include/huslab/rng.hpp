#pragma once

#include <cstdint>

namespace huslab {

/// splitmix64 stream. Standard-library distributions are implementation
/// defined, so reproducible suites draw through this instead.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Uniform integer in [lo, hi] (inclusive).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

private:
  std::uint64_t state_;
};

/// Independently seeded stream for one trial of one suite; merging results
/// by maximum is then independent of how trials are sharded.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t trial) {
  Rng mixer(seed);
  std::uint64_t s = mixer.next();
  s ^= 0x632be59bd9b4e019ull * (stream + 1);
  s += 0x9e3779b97f4a7c15ull * trial;
  return Rng(s);
}

} // namespace huslab
