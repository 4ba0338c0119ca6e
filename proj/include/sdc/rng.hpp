#pragma once

#include <cstdint>

namespace sdc {

// splitmix64 step; the de-facto standard 64-bit mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic per-stream generator. Every random choice in the library
// flows through one of these, keyed by (seed, stream id), so results are
// independent of evaluation order and reproducible bit for bit.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t stream) {
    // Two mixing rounds decorrelate (seed, stream) pairs.
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
    state_ = splitmix64(s) ^ a;
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, bound); bound > 0. Fixed-point multiply keeps the
  // bias below 2^-64 per draw.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sdc
