#pragma once

#include <cstdint>
#include <vector>

#include "netalg/layer_kind.hpp"

namespace netalg {

enum class InputDistribution { standard_normal, uniform_sym };
enum class RatioStatistic { std_ratio, var_ratio };

std::string distribution_name(InputDistribution d);
std::string statistic_name(RatioStatistic s);
InputDistribution distribution_from_name(const std::string& name);
RatioStatistic statistic_from_name(const std::string& name);

/// Monte-Carlo ratio estimate with a batch-based standard error.
struct EstimateResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  InputDistribution distribution = InputDistribution::standard_normal;
  RatioStatistic statistic = RatioStatistic::std_ratio;

  friend bool operator==(const EstimateResult&, const EstimateResult&) = default;
};

/// One row of the box-filter experiment: measured variance ratio for filter
/// size K next to the formula value S_o/(K*S_i).
struct BoxFilterRow {
  int k = 1;
  double var_ratio = 1.0;
  double p_formula = 1.0;
};

using BoxFilterCurve = std::vector<BoxFilterRow>;

/// One row of the activation variance sweep (output variance as a function
/// of input variance).
struct VarianceSweepRow {
  double input_var = 1.0;
  double output_var = 1.0;
};

/// Estimates the intrinsic power of an elementwise activation by sampling:
/// draws n_samples i.i.d. inputs, applies fn, and returns the requested
/// output/input ratio (std_ratio = sigma_out/sigma_in, var_ratio the squared
/// version). Samples are split into independently seeded batches; the
/// estimate is the batch mean and std_error the batch standard error.
/// Deterministic given (args, seed). Softmax is not an elementwise function;
/// use softmax_power_estimate. Throws NumericError on degenerate input.
EstimateResult estimate_activation_power(ActivationFn fn, InputDistribution distribution,
                                         RatioStatistic statistic, std::int64_t n_samples,
                                         std::uint64_t seed);

/// Independent analytic anchor for the sampler under standard normal input.
/// ReLU in closed form (variance ratio 1/2 - 1/(2*pi)); tanh and sigmoid by
/// adaptive quadrature of the first two moments to 1e-8 absolute tolerance.
/// Only relu, tanh and sigmoid are supported.
double activation_power_oracle(ActivationFn fn, RatioStatistic statistic);

/// Mean-filter compression experiment: for each K in 1..k_max, convolves
/// standard-normal vectors of length vector_len with the constant kernel
/// 1/K (valid convolution) and averages the per-vector output/input variance
/// ratio over n_vectors vectors.
BoxFilterCurve boxfilter_experiment(int vector_len, int n_vectors, int k_max, std::uint64_t seed);

/// Softmax power: draws n_trials standard-normal vectors of the given
/// length, applies softmax, and returns the std ratio of all concatenated
/// outputs to inputs. The delta-method value is sqrt(e - 1)/vector_len.
EstimateResult softmax_power_estimate(int vector_len, int n_trials, std::uint64_t seed);

/// Output variance of fn as a function of input variance, sampled on a
/// uniform grid of input variances.
std::vector<VarianceSweepRow> activation_variance_sweep(ActivationFn fn,
                                                        InputDistribution distribution,
                                                        double var_min, double var_max, int steps,
                                                        std::int64_t n_per_point,
                                                        std::uint64_t seed);

/// Elementwise activation evaluation used by the samplers.
double apply_activation(ActivationFn fn, double x);

/// Numerically stable softmax.
std::vector<double> softmax(const std::vector<double>& x);

}  // namespace netalg
