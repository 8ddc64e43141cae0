#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netalg {

/// Power-law fit y = a * x^b obtained by closed-form least squares on
/// (ln x, ln y); r2 is the coefficient of determination in log-log space.
struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double r2 = 0.0;
  std::int64_t n_points = 0;
  std::string x_metric;
  std::string y_metric;
};

struct FitPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Fits y = a*x^b to the given points. Requires >= 3 points with strictly
/// positive coordinates and non-degenerate x spread; throws NumericError.
FitResult fit_power_law(const std::vector<FitPoint>& points);

/// Same fit with x supplied directly as ln(x); lets callers fit quantities
/// whose linear-domain values would overflow a double.
FitResult fit_power_law_logx(const std::vector<double>& ln_x, const std::vector<double>& y);

/// Spearman rank correlation (average ranks on ties).
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace netalg
