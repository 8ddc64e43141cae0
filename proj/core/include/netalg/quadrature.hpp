#pragma once

#include <cmath>
#include <functional>

namespace netalg {

/// Recursive adaptive Simpson quadrature of f over [a, b] to the given
/// absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

/// E[f(Z)] for Z ~ N(0, 1), integrated against the normal density over
/// [-12, 12] (the truncated tail mass is below 1e-32).
double normal_expectation(const std::function<double(double)>& f, double abs_tol = 1e-10);

}  // namespace netalg
