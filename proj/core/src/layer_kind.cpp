#include "netalg/layer_kind.hpp"

#include "netalg/errors.hpp"

namespace netalg {

std::string kind_name(const LayerKind& kind) {
  struct Visitor {
    std::string operator()(const layer::Input&) const { return "input"; }
    std::string operator()(const layer::Conv2D&) const { return "conv2d"; }
    std::string operator()(const layer::ConvTranspose2D&) const { return "conv_transpose2d"; }
    std::string operator()(const layer::Pool2D&) const { return "pool2d"; }
    std::string operator()(const layer::GlobalPool&) const { return "global_pool"; }
    std::string operator()(const layer::Dense&) const { return "dense"; }
    std::string operator()(const layer::Activation&) const { return "activation"; }
    std::string operator()(const layer::BatchNorm&) const { return "batch_norm"; }
    std::string operator()(const layer::Dropout&) const { return "dropout"; }
    std::string operator()(const layer::Add&) const { return "add"; }
    std::string operator()(const layer::Concat&) const { return "concat"; }
    std::string operator()(const layer::Flatten&) const { return "flatten"; }
    std::string operator()(const layer::Identity&) const { return "identity"; }
  };
  return std::visit(Visitor{}, kind);
}

std::string pool_mode_name(PoolMode mode) { return mode == PoolMode::max ? "max" : "avg"; }

PoolMode pool_mode_from_name(const std::string& name) {
  if (name == "max") return PoolMode::max;
  if (name == "avg") return PoolMode::avg;
  throw ParseError("unknown pool mode '" + name + "'");
}

std::string activation_name(ActivationFn fn) {
  switch (fn) {
    case ActivationFn::relu: return "relu";
    case ActivationFn::elu: return "elu";
    case ActivationFn::leaky_relu: return "leaky_relu";
    case ActivationFn::swish: return "swish";
    case ActivationFn::tanh: return "tanh";
    case ActivationFn::sigmoid: return "sigmoid";
    case ActivationFn::softmax: return "softmax";
    case ActivationFn::linear: return "linear";
  }
  return "linear";
}

ActivationFn activation_from_name(const std::string& name) {
  if (name == "relu") return ActivationFn::relu;
  if (name == "elu") return ActivationFn::elu;
  if (name == "leaky_relu") return ActivationFn::leaky_relu;
  if (name == "swish") return ActivationFn::swish;
  if (name == "tanh") return ActivationFn::tanh;
  if (name == "sigmoid") return ActivationFn::sigmoid;
  if (name == "softmax") return ActivationFn::softmax;
  if (name == "linear") return ActivationFn::linear;
  throw ParseError("unknown activation '" + name + "'");
}

bool is_merge(const LayerKind& kind) {
  return std::holds_alternative<layer::Add>(kind) || std::holds_alternative<layer::Concat>(kind);
}

}  // namespace netalg
