#include "netalg/shape_inference.hpp"

#include <string>

#include "netalg/errors.hpp"

namespace netalg {
namespace {

[[noreturn]] void fail(const std::string& node, const std::string& msg) {
  throw ShapeError("node '" + node + "': " + msg);
}

std::int64_t windowed_dim(std::int64_t in, int kernel, int stride, int pad,
                          const std::string& node) {
  if (in + 2 * pad < kernel)
    fail(node, "window " + std::to_string(kernel) + " does not fit input extent " +
                   std::to_string(in) + " with pad " + std::to_string(pad));
  return (in + 2 * pad - kernel) / stride + 1;
}

const TensorShape& require_spatial(const TensorShape& s, const std::string& node) {
  if (s.rank() != 3) fail(node, "expected a rank-3 [h, w, c] input, got " + s.to_string());
  return s;
}

}  // namespace

std::pair<int, int> resolve_padding(const Padding& pad, int kernel_h, int kernel_w) {
  switch (pad.mode) {
    case Padding::Mode::valid: return {0, 0};
    case Padding::Mode::explicit_: return {pad.pad_h, pad.pad_w};
    case Padding::Mode::same:
      if (kernel_h % 2 == 0 || kernel_w % 2 == 0)
        throw ShapeError("\"same\" padding requires odd kernel dims, got " +
                         std::to_string(kernel_h) + "x" + std::to_string(kernel_w));
      return {kernel_h / 2, kernel_w / 2};
  }
  return {0, 0};
}

NetworkGraph infer_shapes(const NetworkGraph& g) {
  {
    const auto report = validate_graph(g);
    if (!report.ok())
      throw GraphError("cannot infer shapes on an invalid graph (" +
                       violation_kind_name(report.violations.front().kind) + ": " +
                       report.violations.front().detail + ")");
  }

  NetworkGraph out = g;
  const auto idx = node_index(out);

  auto in_shape = [&](const LayerNode& n, std::size_t i = 0) -> const TensorShape& {
    return *out.nodes[idx.at(n.inputs.at(i))].out_shape;
  };

  for (auto pos : topological_positions(out)) {
    auto& n = out.nodes[pos];
    TensorShape shape;

    if (std::get_if<layer::Input>(&n.kind)) {
      shape = out.input_shape;
    } else if (const auto* c = std::get_if<layer::Conv2D>(&n.kind)) {
      const auto& s = require_spatial(in_shape(n), n.id);
      const auto [ph, pw] = resolve_padding(c->padding, c->kernel_h, c->kernel_w);
      shape = TensorShape{windowed_dim(s.dim(0), c->kernel_h, c->stride, ph, n.id),
                          windowed_dim(s.dim(1), c->kernel_w, c->stride, pw, n.id), c->filters};
    } else if (const auto* t = std::get_if<layer::ConvTranspose2D>(&n.kind)) {
      const auto& s = require_spatial(in_shape(n), n.id);
      const auto [ph, pw] = resolve_padding(t->padding, t->kernel_h, t->kernel_w);
      const std::int64_t oh = (s.dim(0) - 1) * t->stride - 2 * ph + t->kernel_h;
      const std::int64_t ow = (s.dim(1) - 1) * t->stride - 2 * pw + t->kernel_w;
      if (oh < 1 || ow < 1) fail(n.id, "transpose conv output has non-positive extent");
      shape = TensorShape{oh, ow, t->filters};
    } else if (const auto* p = std::get_if<layer::Pool2D>(&n.kind)) {
      const auto& s = require_spatial(in_shape(n), n.id);
      const auto [ph, pw] = resolve_padding(p->padding, p->kernel_h, p->kernel_w);
      shape = TensorShape{windowed_dim(s.dim(0), p->kernel_h, p->stride, ph, n.id),
                          windowed_dim(s.dim(1), p->kernel_w, p->stride, pw, n.id), s.dim(2)};
    } else if (std::get_if<layer::GlobalPool>(&n.kind)) {
      const auto& s = require_spatial(in_shape(n), n.id);
      shape = TensorShape{1, 1, s.dim(2)};
    } else if (const auto* d = std::get_if<layer::Dense>(&n.kind)) {
      const auto& s = in_shape(n);
      if (!s.is_flat())
        fail(n.id, "dense requires a flat input (insert flatten), got " + s.to_string());
      shape = TensorShape{d->units};
    } else if (std::get_if<layer::Add>(&n.kind)) {
      const auto& first = in_shape(n, 0);
      for (std::size_t i = 1; i < n.inputs.size(); ++i)
        if (!(in_shape(n, i) == first))
          fail(n.id, "add requires equal input shapes, got " + first.to_string() + " and " +
                         in_shape(n, i).to_string());
      shape = first;
    } else if (std::get_if<layer::Concat>(&n.kind)) {
      const auto& first = in_shape(n, 0);
      if (first.is_flat()) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < n.inputs.size(); ++i) {
          if (!in_shape(n, i).is_flat()) fail(n.id, "concat inputs must all be flat or all spatial");
          total += in_shape(n, i).dim(0);
        }
        shape = TensorShape{total};
      } else {
        std::int64_t channels = 0;
        for (std::size_t i = 0; i < n.inputs.size(); ++i) {
          const auto& s = require_spatial(in_shape(n, i), n.id);
          if (s.dim(0) != first.dim(0) || s.dim(1) != first.dim(1))
            fail(n.id, "concat requires equal spatial dims, got " + first.to_string() + " and " +
                           s.to_string());
          channels += s.dim(2);
        }
        shape = TensorShape{first.dim(0), first.dim(1), channels};
      }
    } else if (std::get_if<layer::Flatten>(&n.kind)) {
      shape = TensorShape{in_shape(n).volume()};
    } else {
      // Activation, BatchNorm, Dropout, Identity keep the input shape.
      shape = in_shape(n);
    }
    n.out_shape = shape;
  }
  return out;
}

}  // namespace netalg
