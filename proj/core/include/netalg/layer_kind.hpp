#pragma once

#include <string>
#include <variant>

namespace netalg {

enum class PoolMode { max, avg };

enum class ActivationFn { relu, elu, leaky_relu, swish, tanh, sigmoid, softmax, linear };

/// Spatial padding of a windowed op. "same" resolves to floor(kernel/2) per
/// side (odd kernels only); "valid" is zero padding.
struct Padding {
  enum class Mode { same, valid, explicit_ };
  Mode mode = Mode::valid;
  int pad_h = 0;
  int pad_w = 0;

  static Padding same() { return {Mode::same, 0, 0}; }
  static Padding valid() { return {Mode::valid, 0, 0}; }
  static Padding explicit_pad(int h, int w) { return {Mode::explicit_, h, w}; }

  friend bool operator==(const Padding&, const Padding&) = default;
};

namespace layer {

struct Input {
  friend bool operator==(const Input&, const Input&) = default;
};

struct Conv2D {
  int kernel_h = 1;
  int kernel_w = 1;
  int stride = 1;
  Padding padding;
  int filters = 1;
  bool use_bias = true;
  friend bool operator==(const Conv2D&, const Conv2D&) = default;
};

struct ConvTranspose2D {
  int kernel_h = 1;
  int kernel_w = 1;
  int stride = 1;
  Padding padding;
  int filters = 1;
  bool use_bias = true;
  friend bool operator==(const ConvTranspose2D&, const ConvTranspose2D&) = default;
};

struct Pool2D {
  PoolMode mode = PoolMode::max;
  int kernel_h = 1;
  int kernel_w = 1;
  int stride = 1;
  Padding padding;
  friend bool operator==(const Pool2D&, const Pool2D&) = default;
};

struct GlobalPool {
  PoolMode mode = PoolMode::avg;
  friend bool operator==(const GlobalPool&, const GlobalPool&) = default;
};

struct Dense {
  int units = 1;
  bool use_bias = true;
  friend bool operator==(const Dense&, const Dense&) = default;
};

struct Activation {
  ActivationFn fn = ActivationFn::linear;
  friend bool operator==(const Activation&, const Activation&) = default;
};

struct BatchNorm {
  friend bool operator==(const BatchNorm&, const BatchNorm&) = default;
};

struct Dropout {
  double rate = 0.5;
  friend bool operator==(const Dropout&, const Dropout&) = default;
};

struct Add {
  friend bool operator==(const Add&, const Add&) = default;
};

struct Concat {
  friend bool operator==(const Concat&, const Concat&) = default;
};

struct Flatten {
  friend bool operator==(const Flatten&, const Flatten&) = default;
};

struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};

}  // namespace layer

using LayerKind =
    std::variant<layer::Input, layer::Conv2D, layer::ConvTranspose2D, layer::Pool2D,
                 layer::GlobalPool, layer::Dense, layer::Activation, layer::BatchNorm,
                 layer::Dropout, layer::Add, layer::Concat, layer::Flatten, layer::Identity>;

/// Wire names used by the JSON format and report columns.
std::string kind_name(const LayerKind& kind);

std::string pool_mode_name(PoolMode mode);
std::string activation_name(ActivationFn fn);

/// Inverse of activation_name; throws ParseError on unknown names.
ActivationFn activation_from_name(const std::string& name);
PoolMode pool_mode_from_name(const std::string& name);

/// Merge nodes (Add, Concat) combine several incoming paths.
bool is_merge(const LayerKind& kind);

}  // namespace netalg
