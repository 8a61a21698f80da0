#pragma once

#include <cstdint>
#include <random>

#include "core/rat.hpp"

namespace tverberg {

// Deterministic random source. mt19937_64 raw output is pinned by the
// standard, so identical seeds reproduce identical streams on every
// platform; std::uniform_int_distribution is not, hence the hand-rolled
// rejection sampler.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next()); // full 64-bit span
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
    std::uint64_t v = next();
    while (v > limit) v = next();
    return lo + static_cast<std::int64_t>(v % range);
  }

  // Uniform rational in [-delta, delta] on the grid delta/2^30.
  Rat uniform_symmetric(const Rat& delta) {
    const std::int64_t grid = std::int64_t{1} << 30;
    std::int64_t u = uniform_int(-grid, grid);
    return delta * Rat(u, grid);
  }

private:
  std::mt19937_64 eng_;
};

// Stream derivation so that independent draws (perturbation, initial
// configuration, restarts) never share a generator state.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace tverberg
