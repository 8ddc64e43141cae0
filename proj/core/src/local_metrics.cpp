#include "netalg/local_metrics.hpp"

#include <cmath>

#include <json.hpp>

#include "netalg/errors.hpp"

namespace netalg {

ActivationConstants ActivationConstants::defaults() {
  ActivationConstants c;
  const LocalMetrics relu_like{0.584, 1.713, false};
  c.table_[ActivationFn::relu] = relu_like;
  c.table_[ActivationFn::elu] = relu_like;
  c.table_[ActivationFn::leaky_relu] = relu_like;
  c.table_[ActivationFn::swish] = relu_like;
  c.table_[ActivationFn::tanh] = {0.628, 1.592, false};
  c.table_[ActivationFn::sigmoid] = {0.208, 4.802, false};
  c.table_[ActivationFn::softmax] = {1.342e-05, 7.454e4, false};
  c.table_[ActivationFn::linear] = {1.0, 0.0, true};
  return c;
}

ActivationConstants ActivationConstants::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed constants JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("constants document must be an object");

  ActivationConstants c = defaults();
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const ActivationFn fn = activation_from_name(it.key());
    const auto& entry = it.value();
    if (!entry.is_object() || !entry.contains("p") || !entry.contains("c"))
      throw ParseError("constants entry '" + it.key() + "' must be {\"p\": .., \"c\": ..}");
    for (auto f = entry.begin(); f != entry.end(); ++f)
      if (f.key() != "p" && f.key() != "c")
        throw ParseError("constants entry '" + it.key() + "': unknown field '" + f.key() + "'");
    const double p = entry.at("p").get<double>();
    const double cap = entry.at("c").get<double>();
    if (!(p > 0.0) || cap < 0.0)
      throw ParseError("constants entry '" + it.key() + "' must have p > 0 and c >= 0");
    c.table_[fn] = {p, cap, fn == ActivationFn::linear};
  }
  return c;
}

namespace {

std::int64_t kernel_size(int kernel_h, int kernel_w) {
  return static_cast<std::int64_t>(kernel_h) * kernel_w;
}

}  // namespace

LocalMetrics conv_metrics(int kernel_h, int kernel_w, int filters, const TensorShape& in_shape,
                          const TensorShape& out_shape) {
  const double k = static_cast<double>(kernel_size(kernel_h, kernel_w));
  const double connections_in = k * static_cast<double>(in_shape.channels());
  const double p = filters * static_cast<double>(out_shape.spatial()) /
                   (connections_in * static_cast<double>(in_shape.spatial()));
  const double c = filters * std::log2(k);
  return {p, c, false};
}

LocalMetrics transpose_conv_metrics(int kernel_h, int kernel_w, int filters,
                                    const TensorShape& in_shape, const TensorShape& out_shape) {
  const double k = static_cast<double>(kernel_size(kernel_h, kernel_w));
  const double connections_in = static_cast<double>(in_shape.channels());
  const double p = filters * k * static_cast<double>(out_shape.spatial()) /
                   (connections_in * static_cast<double>(in_shape.spatial()));
  const double c = filters * std::log2(k);
  return {p, c, false};
}

LocalMetrics pool_metrics(PoolMode /*mode*/, int kernel_h, int kernel_w,
                          const TensorShape& in_shape, const TensorShape& out_shape) {
  const double k = static_cast<double>(kernel_size(kernel_h, kernel_w));
  const double p =
      static_cast<double>(out_shape.spatial()) / (k * static_cast<double>(in_shape.spatial()));
  return {p, std::log2(k), false};
}

LocalMetrics global_pool_metrics(const TensorShape& in_shape) {
  const double s = static_cast<double>(in_shape.spatial());
  return {1.0 / (s * s), std::log2(s), false};
}

LocalMetrics dense_metrics(std::int64_t d_in, std::int64_t d_out) {
  const double p = static_cast<double>(d_out) / static_cast<double>(d_in);
  const double c = std::log2(static_cast<double>(d_out) * static_cast<double>(d_in));
  return {p, c, false};
}

LocalMetrics activation_metrics(ActivationFn fn, const ActivationConstants& constants) {
  return constants.lookup(fn);
}

LocalMetrics neutral_metrics() { return {1.0, 0.0, true}; }

LocalMetrics node_metrics(const LayerNode& node, const NetworkGraph& graph,
                          const ActivationConstants& constants) {
  auto in_shape = [&]() -> const TensorShape& {
    const auto* producer = graph.find(node.inputs.at(0));
    if (!producer || !producer->out_shape)
      throw GraphError("node '" + node.id + "': metrics need an inferred graph");
    return *producer->out_shape;
  };
  auto out_shape = [&]() -> const TensorShape& {
    if (!node.out_shape)
      throw GraphError("node '" + node.id + "': metrics need an inferred graph");
    return *node.out_shape;
  };

  if (const auto* c = std::get_if<layer::Conv2D>(&node.kind))
    return conv_metrics(c->kernel_h, c->kernel_w, c->filters, in_shape(), out_shape());
  if (const auto* t = std::get_if<layer::ConvTranspose2D>(&node.kind))
    return transpose_conv_metrics(t->kernel_h, t->kernel_w, t->filters, in_shape(), out_shape());
  if (const auto* p = std::get_if<layer::Pool2D>(&node.kind))
    return pool_metrics(p->mode, p->kernel_h, p->kernel_w, in_shape(), out_shape());
  if (std::get_if<layer::GlobalPool>(&node.kind)) return global_pool_metrics(in_shape());
  if (std::get_if<layer::Dense>(&node.kind))
    return dense_metrics(in_shape().dim(0), out_shape().dim(0));
  if (const auto* a = std::get_if<layer::Activation>(&node.kind))
    return activation_metrics(a->fn, constants);
  return neutral_metrics();
}

std::vector<LocalMetrics> all_node_metrics(const NetworkGraph& graph,
                                           const ActivationConstants& constants) {
  std::vector<LocalMetrics> metrics;
  metrics.reserve(graph.nodes.size());
  for (const auto& n : graph.nodes) metrics.push_back(node_metrics(n, graph, constants));
  return metrics;
}

std::int64_t count_params(const NetworkGraph& graph) {
  const auto idx = node_index(graph);
  auto in_shape = [&](const LayerNode& n) -> const TensorShape& {
    const auto& s = graph.nodes[idx.at(n.inputs.at(0))].out_shape;
    if (!s) throw GraphError("count_params needs an inferred graph");
    return *s;
  };

  std::int64_t total = 0;
  for (const auto& n : graph.nodes) {
    if (const auto* c = std::get_if<layer::Conv2D>(&n.kind)) {
      const std::int64_t per_filter =
          static_cast<std::int64_t>(c->kernel_h) * c->kernel_w * in_shape(n).channels() +
          (c->use_bias ? 1 : 0);
      total += per_filter * c->filters;
    } else if (const auto* t = std::get_if<layer::ConvTranspose2D>(&n.kind)) {
      const std::int64_t per_filter =
          static_cast<std::int64_t>(t->kernel_h) * t->kernel_w * in_shape(n).channels() +
          (t->use_bias ? 1 : 0);
      total += per_filter * t->filters;
    } else if (const auto* d = std::get_if<layer::Dense>(&n.kind)) {
      total += (in_shape(n).dim(0) + (d->use_bias ? 1 : 0)) * d->units;
    } else if (std::get_if<layer::BatchNorm>(&n.kind)) {
      total += 2 * in_shape(n).channels();
    }
  }
  return total;
}

}  // namespace netalg
