#pragma once

// Reproducible, splittable random streams.
//
// A stream is identified by (base_seed, stream_index). Its generator is
// xoshiro256** whose four state words are the first four outputs of a
// SplitMix64 sequence started at
//
//   key = mix64(base_seed ^ mix64(stream_index + 0x9E3779B97F4A7C15))
//
// where mix64 is the SplitMix64 finalizer. Uniform doubles take the top 53
// bits: u = (next() >> 11) * 2^-53, so u is in [0, 1). The rule is fixed;
// changing it changes every published result.

#include <cstdint>
#include <limits>

namespace amgm {

struct SeededStream {
  std::uint64_t base_seed = 0;
  std::uint64_t stream_index = 0;

  /// The stream offset by k, sharing the base seed.
  SeededStream offset(std::uint64_t k) const noexcept { return {base_seed, stream_index + k}; }
};

/// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  constexpr std::uint64_t next() noexcept { return mix64(state_ += 0x9E3779B97F4A7C15ULL); }

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(SeededStream stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_[4];
};

std::uint64_t stream_key(SeededStream stream) noexcept;

}  // namespace amgm
