#pragma once

#include <cmath>
#include <cstdint>

#include "netalg/errors.hpp"

namespace netalg {

/// Nearly tight VC-dimension bound for piecewise-linear networks,
/// Theta(W * L * log W) with unit constant: W * L * log2(W).
/// W is the number of weights, L the number of layers.
inline double vc_bound(std::int64_t weights, std::int64_t layers) {
  if (weights < 2 || layers < 1) throw NumericError("vc_bound needs weights >= 2, layers >= 1");
  return static_cast<double>(weights) * static_cast<double>(layers) *
         std::log2(static_cast<double>(weights));
}

}  // namespace netalg
