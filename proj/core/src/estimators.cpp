#include "netalg/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "netalg/errors.hpp"
#include "netalg/log2_ops.hpp"
#include "netalg/quadrature.hpp"
#include "netalg/rng.hpp"

namespace netalg {

std::string distribution_name(InputDistribution d) {
  return d == InputDistribution::standard_normal ? "standard_normal" : "uniform_sym";
}

std::string statistic_name(RatioStatistic s) {
  return s == RatioStatistic::std_ratio ? "std_ratio" : "var_ratio";
}

InputDistribution distribution_from_name(const std::string& name) {
  if (name == "standard_normal") return InputDistribution::standard_normal;
  if (name == "uniform_sym") return InputDistribution::uniform_sym;
  throw ParseError("unknown distribution '" + name + "'");
}

RatioStatistic statistic_from_name(const std::string& name) {
  if (name == "std_ratio") return RatioStatistic::std_ratio;
  if (name == "var_ratio") return RatioStatistic::var_ratio;
  throw ParseError("unknown statistic '" + name + "'");
}

double apply_activation(ActivationFn fn, double x) {
  switch (fn) {
    case ActivationFn::relu: return x > 0.0 ? x : 0.0;
    case ActivationFn::elu: return x > 0.0 ? x : std::expm1(x);
    case ActivationFn::leaky_relu: return x > 0.0 ? x : 0.01 * x;
    case ActivationFn::swish: return x / (1.0 + std::exp(-x));
    case ActivationFn::tanh: return std::tanh(x);
    case ActivationFn::sigmoid: return 1.0 / (1.0 + std::exp(-x));
    case ActivationFn::linear: return x;
    case ActivationFn::softmax:
      throw NumericError("softmax is not elementwise; use softmax_power_estimate");
  }
  return x;
}

std::vector<double> softmax(const std::vector<double>& x) {
  const double hi = *std::max_element(x.begin(), x.end());
  double denom = 0.0;
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::exp(x[i] - hi);
    denom += out[i];
  }
  for (auto& v : out) v /= denom;
  return out;
}

namespace {

struct Moments {
  double mean = 0.0;
  double var = 0.0;  // sample variance (n - 1 denominator)
};

Moments welford(const std::vector<double>& xs) {
  Moments m;
  double m2 = 0.0;
  std::int64_t n = 0;
  for (double x : xs) {
    ++n;
    const double d = x - m.mean;
    m.mean += d / static_cast<double>(n);
    m2 += d * (x - m.mean);
  }
  m.var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  return m;
}

double draw(Sampler& s, InputDistribution d) {
  return d == InputDistribution::standard_normal ? s.normal() : s.uniform_sym();
}

constexpr int kBatches = 32;

}  // namespace

EstimateResult estimate_activation_power(ActivationFn fn, InputDistribution distribution,
                                         RatioStatistic statistic, std::int64_t n_samples,
                                         std::uint64_t seed) {
  if (n_samples < 1000) throw NumericError("estimate_activation_power needs n_samples >= 1000");

  const std::int64_t per_batch = n_samples / kBatches;
  std::vector<double> ratios(kBatches);
  for (int b = 0; b < kBatches; ++b) {
    Sampler sampler(derive_seed(seed, static_cast<std::uint64_t>(b)));
    std::vector<double> in(static_cast<std::size_t>(per_batch));
    std::vector<double> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      in[i] = draw(sampler, distribution);
      out[i] = apply_activation(fn, in[i]);
    }
    const double var_in = welford(in).var;
    if (var_in <= 0.0) throw NumericError("degenerate input sample (zero variance)");
    const double ratio = welford(out).var / var_in;
    ratios[static_cast<std::size_t>(b)] =
        statistic == RatioStatistic::std_ratio ? std::sqrt(ratio) : ratio;
  }

  const double mean = pairwise_sum(ratios) / kBatches;
  std::vector<double> sq(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) sq[i] = (ratios[i] - mean) * (ratios[i] - mean);
  const double var_between = pairwise_sum(sq) / (kBatches - 1);

  EstimateResult r;
  r.estimate = mean;
  r.std_error = std::sqrt(var_between / kBatches);
  r.n_samples = per_batch * kBatches;
  r.distribution = distribution;
  r.statistic = statistic;
  return r;
}

double activation_power_oracle(ActivationFn fn, RatioStatistic statistic) {
  double var = 0.0;
  switch (fn) {
    case ActivationFn::relu:
      // E[relu(Z)] = 1/sqrt(2*pi), E[relu(Z)^2] = 1/2.
      var = 0.5 - 1.0 / (2.0 * std::numbers::pi);
      break;
    case ActivationFn::tanh: {
      const double m2 = normal_expectation([](double z) { return std::tanh(z) * std::tanh(z); },
                                           1e-10);
      const double m1 = normal_expectation([](double z) { return std::tanh(z); }, 1e-10);
      var = m2 - m1 * m1;
      break;
    }
    case ActivationFn::sigmoid: {
      auto sig = [](double z) { return 1.0 / (1.0 + std::exp(-z)); };
      const double m2 = normal_expectation([&](double z) { return sig(z) * sig(z); }, 1e-10);
      const double m1 = normal_expectation([&](double z) { return sig(z); }, 1e-10);
      var = m2 - m1 * m1;
      break;
    }
    default:
      throw NumericError("oracle supports relu, tanh and sigmoid only");
  }
  return statistic == RatioStatistic::std_ratio ? std::sqrt(var) : var;
}

BoxFilterCurve boxfilter_experiment(int vector_len, int n_vectors, int k_max,
                                    std::uint64_t seed) {
  if (vector_len < k_max || k_max < 1)
    throw NumericError("boxfilter_experiment needs vector_len >= k_max >= 1");

  // ratios[k - 1][r] holds Var(out)/Var(in) of vector r under filter size k;
  // vectors are independent replicate streams.
  std::vector<std::vector<double>> ratios(static_cast<std::size_t>(k_max),
                                          std::vector<double>(static_cast<std::size_t>(n_vectors)));
  std::vector<double> v(static_cast<std::size_t>(vector_len));
  std::vector<double> prefix(v.size() + 1);

  for (int r = 0; r < n_vectors; ++r) {
    Sampler sampler(derive_seed(seed, static_cast<std::uint64_t>(r)));
    for (auto& x : v) x = sampler.normal();
    const double var_in = welford(v).var;

    prefix[0] = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) prefix[i + 1] = prefix[i] + v[i];

    for (int k = 1; k <= k_max; ++k) {
      const std::size_t n_out = v.size() - static_cast<std::size_t>(k) + 1;
      // Running moments of the mean filter output over all windows.
      double mean = 0.0;
      double m2 = 0.0;
      for (std::size_t j = 0; j < n_out; ++j) {
        const double out = (prefix[j + static_cast<std::size_t>(k)] - prefix[j]) / k;
        const double d = out - mean;
        mean += d / static_cast<double>(j + 1);
        m2 += d * (out - mean);
      }
      const double var_out = n_out > 1 ? m2 / static_cast<double>(n_out - 1) : 0.0;
      ratios[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(r)] = var_out / var_in;
    }
  }

  BoxFilterCurve curve;
  curve.reserve(static_cast<std::size_t>(k_max));
  const double s_in = static_cast<double>(vector_len);
  for (int k = 1; k <= k_max; ++k) {
    const double avg = pairwise_sum(ratios[static_cast<std::size_t>(k - 1)]) / n_vectors;
    const double s_out = static_cast<double>(vector_len - k + 1);
    curve.push_back({k, avg, s_out / (k * s_in)});
  }
  return curve;
}

EstimateResult softmax_power_estimate(int vector_len, int n_trials, std::uint64_t seed) {
  if (vector_len < 2) throw NumericError("softmax_power_estimate needs vector_len >= 2");
  if (n_trials < 1) throw NumericError("softmax_power_estimate needs n_trials >= 1");

  // Concatenated input and output moments across all trials.
  double in_mean = 0.0, in_m2 = 0.0;
  double out_mean = 0.0, out_m2 = 0.0;
  std::int64_t n = 0;
  std::vector<double> x(static_cast<std::size_t>(vector_len));

  for (int t = 0; t < n_trials; ++t) {
    Sampler sampler(derive_seed(seed, static_cast<std::uint64_t>(t)));
    for (auto& v : x) v = sampler.normal();
    const auto y = softmax(x);
    for (int i = 0; i < vector_len; ++i) {
      ++n;
      double d = x[static_cast<std::size_t>(i)] - in_mean;
      in_mean += d / static_cast<double>(n);
      in_m2 += d * (x[static_cast<std::size_t>(i)] - in_mean);
      d = y[static_cast<std::size_t>(i)] - out_mean;
      out_mean += d / static_cast<double>(n);
      out_m2 += d * (y[static_cast<std::size_t>(i)] - out_mean);
    }
  }

  const double var_in = in_m2 / static_cast<double>(n - 1);
  const double var_out = out_m2 / static_cast<double>(n - 1);
  if (var_in <= 0.0) throw NumericError("degenerate input sample (zero variance)");

  EstimateResult r;
  r.estimate = std::sqrt(var_out / var_in);
  // Crude large-sample error bound for the concatenated ratio.
  r.std_error = r.estimate * std::sqrt(2.0 / static_cast<double>(n - 1));
  r.n_samples = n;
  r.distribution = InputDistribution::standard_normal;
  r.statistic = RatioStatistic::std_ratio;
  return r;
}

std::vector<VarianceSweepRow> activation_variance_sweep(ActivationFn fn,
                                                        InputDistribution distribution,
                                                        double var_min, double var_max, int steps,
                                                        std::int64_t n_per_point,
                                                        std::uint64_t seed) {
  if (steps < 1 || var_min <= 0.0 || var_max < var_min)
    throw NumericError("bad variance sweep grid");

  std::vector<VarianceSweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) {
    const double input_var =
        steps == 1 ? var_min
                   : var_min + (var_max - var_min) * static_cast<double>(s) / (steps - 1);
    const double scale = std::sqrt(input_var);
    Sampler sampler(derive_seed(seed, static_cast<std::uint64_t>(s)));
    std::vector<double> out(static_cast<std::size_t>(n_per_point));
    for (auto& v : out) v = apply_activation(fn, scale * draw(sampler, distribution));
    rows.push_back({input_var, welford(out).var});
  }
  return rows;
}

}  // namespace netalg
