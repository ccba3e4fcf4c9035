#pragma once

// Counter-based random numbers: Philox4x32-10 keyed by a 64-bit seed.
// Draw j of a stream depends only on (seed, domain, j), so any scheduling
// of replications across workers reproduces the same values.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace evtcvar::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter philox4x32_10(Counter ctr, Key key) {
  constexpr std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u, w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += w0;
      key[1] += w1;
    }
    const std::uint64_t p0 = std::uint64_t(m0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(m1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1), std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
           std::uint32_t(p0)};
  }
  return ctr;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed of replication `rep` in experiment cell `cell`:
///   splitmix64(splitmix64(splitmix64(master) ^ cell * phi) ^ (rep + 1))
/// with phi = 0x9E3779B97F4A7C15.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t rep) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ (cell * 0x9E3779B97F4A7C15ull));
  return splitmix64(s ^ (rep + 1));
}

/// Top 52 bits mapped to the open interval (0, 1); every result is exact.
inline double to_open_unit(std::uint64_t bits) {
  return (double(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Independent sub-streams of one seed.
enum class Domain : std::uint32_t { sample = 0, gaussian = 1 };

class CounterStream {
 public:
  explicit CounterStream(std::uint64_t seed, Domain domain = Domain::sample)
      : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, domain_(std::uint32_t(domain)) {}

  /// Uniforms 2j and 2j+1 of the stream.
  std::array<double, 2> uniform_pair(std::uint64_t block) const {
    const Counter out = philox4x32_10({std::uint32_t(block), std::uint32_t(block >> 32), domain_, 0u}, key_);
    return {to_open_unit((std::uint64_t(out[1]) << 32) | out[0]), to_open_unit((std::uint64_t(out[3]) << 32) | out[2])};
  }

  double uniform(std::uint64_t index) const { return uniform_pair(index / 2)[index % 2]; }

  /// Two standard normals from block j (Box-Muller).
  std::array<double, 2> normal_pair(std::uint64_t block) const {
    const auto u = uniform_pair(block);
    const double r = std::sqrt(-2.0 * std::log(u[0]));
    const double theta = 2.0 * std::numbers::pi * u[1];
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  /// Fills out[0..n) with uniforms 0..n-1.
  template <class OutIt>
  void fill_uniform(std::uint64_t n, OutIt out) const {
    std::uint64_t i = 0;
    for (std::uint64_t block = 0; i < n; ++block) {
      const auto u = uniform_pair(block);
      *out++ = u[0];
      if (++i < n) {
        *out++ = u[1];
        ++i;
      }
    }
  }

 private:
  Key key_;
  std::uint32_t domain_;
};

}  // namespace evtcvar::rng
