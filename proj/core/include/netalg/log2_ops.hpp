#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>

namespace netalg {

/// log2(2^a + 2^b) without leaving the log domain.
inline double log2_sum2(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp2(lo - hi)) / std::numbers::ln2;
}

/// log2 of the sum of 2^values over a span.
inline double log2_sum(std::span<const double> values) {
  double acc = -std::numeric_limits<double>::infinity();
  for (double v : values) acc = log2_sum2(acc, v);
  return acc;
}

/// Order-insensitive pairwise summation: sum(x) computed over a balanced
/// reduction tree, so concurrent producers of x can be reduced identically.
inline double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

}  // namespace netalg
