#pragma once

#include <cstdint>

namespace helfer {

//! SplitMix64 step; used for seed expansion.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

//! xoshiro256++ with SplitMix64 state expansion.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    for (auto& word : s_) word = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  //! Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  //! Uniform double in (0, 1).
  double uniform_pos() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

//! Deterministic substream counter scheme: substream k of a master seed
//! expands its 256-bit state from SplitMix64 started at
//! seed + (k+1) * 0x9E3779B97F4A7C15. Substreams are independent of
//! thread placement, so any worker count reproduces the same draws.
inline Xoshiro256pp substream_rng(std::uint64_t seed, int substream) {
  return Xoshiro256pp(seed + static_cast<std::uint64_t>(substream + 1) *
                                 0x9E3779B97F4A7C15ULL);
}

}  // namespace helfer
