#include "amgm/rng.hpp"

namespace amgm {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t stream_key(SeededStream stream) noexcept {
  return mix64(stream.base_seed ^ mix64(stream.stream_index + 0x9E3779B97F4A7C15ULL));
}

Xoshiro256::Xoshiro256(SeededStream stream) noexcept {
  SplitMix64 seeder(stream_key(stream));
  for (auto& word : s_) word = seeder.next();
}

std::uint64_t Xoshiro256::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

}  // namespace amgm
