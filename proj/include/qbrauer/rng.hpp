#pragma once

#include <cstdint>

#include "qbrauer/rational.hpp"

namespace qbrauer {

// splitmix64: tiny, fully specified, bit-portable PRNG for drawing test
// points.  The standard <random> distributions are implementation-defined,
// so sampled values would differ across standard libraries; this does not.
struct SplitMix64 {
  std::uint64_t s;
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform-ish draw in [1, 97]; modulo bias is irrelevant for test points.
  long small() { return static_cast<long>(next() % 97ull) + 1; }
  Rational rational() {
    const long num = small();
    const long den = small();
    return Rational(num, den);
  }
};

}  // namespace qbrauer
