#pragma once

#include <cstdint>
#include <random>

namespace su2kit {

/// Uniform double in [0,1) from the top 53 bits of mt19937_64.  Pinned here
/// (rather than using a library distribution) so identical seeds give
/// identical streams on every platform.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace su2kit
