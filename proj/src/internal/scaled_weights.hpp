#pragma once

#include <cstdint>
#include <vector>

#include "kappa0/graph.hpp"

namespace kappa0::internal {

// Rescales a weight vector by the least common denominator so the hot
// search loops can compare plain 64-bit integers. Falls back to exact
// rationals (fits64 == false) when the scaled values would risk
// overflow; accrued sums stay far below 2^62 because unit values are
// capped at 2^40 and exit counts at a few thousand.
struct ScaledWeights {
  bool fits64 = false;
  std::vector<std::int64_t> units;  // alpha_i * denom, aligned with the support
  Int denom = 1;

  Rat to_rat(std::int64_t scaled) const { return Rat(Int(scaled), denom); }
};

inline ScaledWeights scale_weights(const Weights& weights) {
  ScaledWeights out;
  out.denom = 1;
  for (const Rat& a : weights.alpha())
    out.denom = boost::multiprecision::lcm(out.denom, denominator(a));
  const Int limit = Int(1) << 40;
  out.fits64 = true;
  for (const Rat& a : weights.alpha()) {
    Int unit = numerator(a) * (out.denom / denominator(a));
    if (unit >= limit) {
      out.fits64 = false;
      out.units.clear();
      return out;
    }
    out.units.push_back(unit.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace kappa0::internal
