#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace chartlab {

// Seed expander / mixer (Steele, Lea & Flood's splitmix64). Also used to
// derive sub-stream seeds from a master seed plus an integer label.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Hash-combines one label component into a seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t component) {
  SplitMix64 mixer(seed ^ (component + 0x9E3779B97F4A7C15ULL + (seed << 6) +
                           (seed >> 2)));
  return mixer.next();
}

// Sub-stream seed for a labelled task, e.g. (window count, window, run).
// Mixing is order-sensitive, so reordering label components changes the
// stream; adding strategies or windows elsewhere never does.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> label) {
  std::uint64_t s = master;
  for (std::uint64_t component : label) s = mix_seed(s, component);
  return s;
}

// xoshiro256** 1.0 (Blackman & Vigna), state filled from splitmix64 as the
// authors recommend. Platform-independent given 64-bit integer arithmetic.
class Xoshiro256ss {
 public:
  explicit constexpr Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 expander(seed);
    for (auto& word : state_) word = expander.next();
  }

  constexpr std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4]{};
};

inline constexpr const char* kPrngAlgorithm = "xoshiro256**";

// A deterministic draw stream: identical (seed, label) gives an identical
// sequence of coins / uniforms / gaussians.
class RngStream {
 public:
  explicit constexpr RngStream(std::uint64_t seed) : gen_(seed) {}

  RngStream(std::uint64_t master, std::initializer_list<std::uint64_t> label)
      : gen_(derive_seed(master, label)) {}

  constexpr std::uint64_t next_u64() { return gen_.next(); }

  // True with probability exactly 1/2.
  constexpr bool coin() { return (gen_.next() >> 63) != 0; }

  // Uniform on [0, 1), 53 significant bits.
  constexpr double uniform01() {
    return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes two words per call.
  double gaussian() {
    // u1 in (0, 1] keeps the log finite.
    const double u1 = (static_cast<double>(gen_.next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  Xoshiro256ss gen_;
};

}  // namespace chartlab
