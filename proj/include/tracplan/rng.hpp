#pragma once

#include <cstdint>

namespace tracplan {

/// SplitMix64 finalizer. Used for key derivation and engine seeding.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RngStream;

/// Hierarchical stream key. Child keys are derived by counter so that every
/// worker (candidate, sampled map, trial) owns an independent stream that is
/// reproducible from the master seed alone, regardless of thread scheduling.
class StreamKey {
 public:
  StreamKey() = default;
  explicit StreamKey(std::uint64_t value) : value_(value) {}

  StreamKey child(std::uint64_t index) const {
    return StreamKey(mix64(value_ ^ (0xD1B54A32D192ED03ULL * (index + 1))));
  }

  std::uint64_t value() const { return value_; }

  RngStream stream() const;

 private:
  std::uint64_t value_ = 0;
};

/// xoshiro256++ with explicit Box-Muller normals. Behavior is pinned here
/// rather than delegated to <random> so that streams are identical across
/// standard libraries and platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) {
    std::uint64_t z = seed;
    for (auto& word : state_) {
      z = mix64(z);
      word = z | 1u;  // avoid the all-zero state
    }
    // decorrelate the low-entropy seeding above
    for (int i = 0; i < 8; ++i) next_u64();
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; generates pairs and caches the spare.
  double normal();

  /// Both Box-Muller outputs of one (u1, u2) draw.
  void normal_pair(double& z0, double& z1);

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4] = {};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline RngStream StreamKey::stream() const { return RngStream(value_); }

}  // namespace tracplan
