#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

#include "latconv/int_linalg.hpp"

namespace latconv {

// Counter-based generation: every variate is a pure function of
// (seed, key path, counter), so streams keyed by lattice node coordinates
// are identical no matter how nodes are ordered or which transformation
// is applied later.

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix64(seed)) {}

  CounterRng child(std::int64_t tag) const {
    CounterRng r = *this;
    r.key_ = mix64(r.key_ ^ mix64(static_cast<std::uint64_t>(tag)));
    return r;
  }

  CounterRng keyed(std::span<const Int> path) const {
    CounterRng r = *this;
    for (Int c : path) r = r.child(c);
    return r;
  }

  std::uint64_t word(std::uint64_t counter) const {
    return mix64(key_ ^ (counter * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull));
  }

  // Uniform in (0, 1]; never returns 0 so log() is safe.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>((word(counter) >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on two fixed counters.
  double gaussian(std::uint64_t counter) const {
    double u1 = uniform(2 * counter);
    double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_;
};

// White noise attached to a lattice node, keyed by the node's original
// coordinates only.
inline double node_noise(std::uint64_t seed, std::span<const Int> node) {
  return CounterRng(seed).keyed(node).gaussian(0);
}

}  // namespace latconv
