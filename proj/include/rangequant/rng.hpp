#pragma once

#include <cstdint>
#include <random>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

namespace rangequant {

// 32-bit MT: Boost's ziggurat consumes 32-bit words, and this pairing is the
// fastest of the standard engines for the path simulations.
using Engine = boost::random::mt19937;
// Ziggurat sampler; much faster than std::normal_distribution, which matters
// for the lambda tables (up to 10^10 draws).
using StdNormal = boost::random::normal_distribution<double>;

// Derives an independent stream seed from (master, index) with the
// splitmix64 finaliser, so parallel work is reproducible for any thread count.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Engine make_engine(std::uint64_t master, std::uint64_t index) {
  const std::uint64_t s = split_seed(master, index);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return Engine{seq};
}

}  // namespace rangequant
