#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "netalg/graph.hpp"
#include "netalg/tensor_shape.hpp"

namespace netalg {

/// Per-node pair of intrinsic power and complexity.
///
/// p_local is the dimensionless ratio of output to input signal size for
/// kernel ops, or the variance-derived constant for activations. c_local is
/// the log2-scaled capacity of the local operator. Neutral layers (batch
/// norm, dropout, add, concat, flatten, identity, input) contribute (1, 0).
struct LocalMetrics {
  double p_local = 1.0;
  double c_local = 0.0;
  bool neutral = false;

  friend bool operator==(const LocalMetrics&, const LocalMetrics&) = default;
};

/// Activation constants, data-driven std-ratio values under standard normal
/// input. ReLU variants (elu, leaky_relu, swish) share the ReLU values.
class ActivationConstants {
 public:
  /// Built-in defaults:
  ///   relu/elu/leaky_relu/swish -> (0.584, 1.713)
  ///   tanh                      -> (0.628, 1.592)
  ///   sigmoid                   -> (0.208, 4.802)
  ///   softmax                   -> (1.342e-05, 7.454e4)
  ///   linear                    -> (1.0, 0.0), neutral
  static ActivationConstants defaults();

  /// Defaults with per-function overrides loaded from a JSON document of the
  /// form {"relu": {"p": .., "c": ..}, ...}. Unknown function names or
  /// non-positive values are rejected with ParseError.
  static ActivationConstants from_json(const std::string& text);

  const LocalMetrics& lookup(ActivationFn fn) const { return table_.at(fn); }

  const std::map<ActivationFn, LocalMetrics>& table() const { return table_; }

 private:
  std::map<ActivationFn, LocalMetrics> table_;
};

/// Convolution metrics from the kernel geometry and inferred shapes.
///
/// The number of input connections per output element is the kernel window
/// times the input channel count (1 for channel-less shapes), so
///   p = filters * S_out / (kernel_h * kernel_w * C_in * S_in)
/// with S_* the spatial extents. Complexity is the per-filter kernel
/// capacity, c = filters * log2(kernel_h * kernel_w).
LocalMetrics conv_metrics(int kernel_h, int kernel_w, int filters, const TensorShape& in_shape,
                          const TensorShape& out_shape);

/// Transpose convolution: each input element drives a full kernel window of
/// outputs, p = filters * K * S_out / (C_in * S_in); complexity as for conv.
LocalMetrics transpose_conv_metrics(int kernel_h, int kernel_w, int filters,
                                    const TensorShape& in_shape, const TensorShape& out_shape);

/// Pooling acts per channel with a single implicit filter:
/// p = S_out / (K * S_in), c = log2 K. Max and average pool are identical.
LocalMetrics pool_metrics(PoolMode mode, int kernel_h, int kernel_w, const TensorShape& in_shape,
                          const TensorShape& out_shape);

/// Global pooling is a single window covering the whole input:
/// p = 1 / S_in^2, c = log2 S_in.
LocalMetrics global_pool_metrics(const TensorShape& in_shape);

/// Fully connected: p = d_out / d_in, c = log2(d_out * d_in).
LocalMetrics dense_metrics(std::int64_t d_in, std::int64_t d_out);

/// Constant lookup per activation function; linear is neutral.
LocalMetrics activation_metrics(ActivationFn fn, const ActivationConstants& constants);

/// Neutral metrics (p = 1, c = 0) for structure-only layers.
LocalMetrics neutral_metrics();

/// Dispatch over the node kind; requires an inferred graph.
LocalMetrics node_metrics(const LayerNode& node, const NetworkGraph& graph,
                          const ActivationConstants& constants);

/// All node metrics keyed by position in graph.nodes.
std::vector<LocalMetrics> all_node_metrics(const NetworkGraph& graph,
                                           const ActivationConstants& constants);

/// Trainable parameter count. Conv2D/ConvTranspose2D contribute
/// (kernel_h*kernel_w*C_in + bias)*filters, Dense (d_in + bias)*d_out,
/// BatchNorm 2*channels; all other kinds contribute 0.
std::int64_t count_params(const NetworkGraph& graph);

}  // namespace netalg
