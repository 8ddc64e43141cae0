#include "netalg/graph_json.hpp"

#include <json.hpp>

#include "netalg/errors.hpp"

namespace netalg {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& node, const std::string& msg) {
  if (node.empty()) throw ParseError(msg);
  throw ParseError("node '" + node + "': " + msg);
}

void require_keys(const json& obj, const std::string& node,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  for (const char* key : required)
    if (!obj.contains(key)) fail(node, std::string("missing required field '") + key + "'");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : required) known = known || it.key() == key;
    for (const char* key : optional) known = known || it.key() == key;
    if (!known) fail(node, "unknown field '" + it.key() + "'");
  }
}

int get_int(const json& obj, const std::string& node, const char* key, int min_value) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer())
    fail(node, std::string("field '") + key + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < min_value)
    fail(node, std::string("field '") + key + "' must be >= " + std::to_string(min_value));
  return static_cast<int>(x);
}

bool get_bool(const json& obj, const std::string& node, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) fail(node, std::string("field '") + key + "' must be a boolean");
  return obj.at(key).get<bool>();
}

std::string get_string(const json& obj, const std::string& node, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) fail(node, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Padding parse_padding(const json& v, const std::string& node) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "same") return Padding::same();
    if (s == "valid") return Padding::valid();
    fail(node, "padding must be \"same\", \"valid\" or [pad_h, pad_w], got \"" + s + "\"");
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    const auto ph = v[0].get<std::int64_t>();
    const auto pw = v[1].get<std::int64_t>();
    if (ph < 0 || pw < 0) fail(node, "padding values must be >= 0");
    return Padding::explicit_pad(static_cast<int>(ph), static_cast<int>(pw));
  }
  fail(node, "padding must be \"same\", \"valid\" or [pad_h, pad_w]");
}

LayerKind parse_kind(const std::string& kind, const json& params, const std::string& node) {
  if (kind == "input") {
    require_keys(params, node, {});
    return layer::Input{};
  }
  if (kind == "conv2d" || kind == "conv_transpose2d") {
    require_keys(params, node, {"kernel_h", "kernel_w", "stride", "padding", "filters"},
                 {"use_bias"});
    const int kh = get_int(params, node, "kernel_h", 1);
    const int kw = get_int(params, node, "kernel_w", 1);
    const int stride = get_int(params, node, "stride", 1);
    const int filters = get_int(params, node, "filters", 1);
    const Padding pad = parse_padding(params.at("padding"), node);
    const bool bias = get_bool(params, node, "use_bias", true);
    if (kind == "conv2d") return layer::Conv2D{kh, kw, stride, pad, filters, bias};
    return layer::ConvTranspose2D{kh, kw, stride, pad, filters, bias};
  }
  if (kind == "pool2d") {
    require_keys(params, node, {"mode", "kernel_h", "kernel_w", "stride", "padding"});
    return layer::Pool2D{pool_mode_from_name(get_string(params, node, "mode")),
                         get_int(params, node, "kernel_h", 1),
                         get_int(params, node, "kernel_w", 1),
                         get_int(params, node, "stride", 1),
                         parse_padding(params.at("padding"), node)};
  }
  if (kind == "global_pool") {
    require_keys(params, node, {"mode"});
    return layer::GlobalPool{pool_mode_from_name(get_string(params, node, "mode"))};
  }
  if (kind == "dense") {
    require_keys(params, node, {"units"}, {"use_bias"});
    return layer::Dense{get_int(params, node, "units", 1), get_bool(params, node, "use_bias", true)};
  }
  if (kind == "activation") {
    require_keys(params, node, {"fn"});
    return layer::Activation{activation_from_name(get_string(params, node, "fn"))};
  }
  if (kind == "batch_norm") {
    require_keys(params, node, {});
    return layer::BatchNorm{};
  }
  if (kind == "dropout") {
    require_keys(params, node, {"rate"});
    const auto& v = params.at("rate");
    if (!v.is_number()) fail(node, "field 'rate' must be a number");
    const double rate = v.get<double>();
    if (rate < 0.0 || rate >= 1.0) fail(node, "dropout rate must satisfy 0 <= rate < 1");
    return layer::Dropout{rate};
  }
  if (kind == "add") {
    require_keys(params, node, {});
    return layer::Add{};
  }
  if (kind == "concat") {
    require_keys(params, node, {});
    return layer::Concat{};
  }
  if (kind == "flatten") {
    require_keys(params, node, {});
    return layer::Flatten{};
  }
  if (kind == "identity") {
    require_keys(params, node, {});
    return layer::Identity{};
  }
  fail(node, "unknown kind '" + kind + "'");
}

ordered_json padding_to_json(const Padding& p) {
  switch (p.mode) {
    case Padding::Mode::same: return "same";
    case Padding::Mode::valid: return "valid";
    case Padding::Mode::explicit_: return ordered_json::array({p.pad_h, p.pad_w});
  }
  return "valid";
}

ordered_json params_to_json(const LayerKind& kind) {
  struct Visitor {
    ordered_json operator()(const layer::Input&) const { return ordered_json::object(); }
    ordered_json operator()(const layer::Conv2D& c) const {
      ordered_json p;
      p["kernel_h"] = c.kernel_h;
      p["kernel_w"] = c.kernel_w;
      p["stride"] = c.stride;
      p["padding"] = padding_to_json(c.padding);
      p["filters"] = c.filters;
      if (!c.use_bias) p["use_bias"] = false;
      return p;
    }
    ordered_json operator()(const layer::ConvTranspose2D& c) const {
      ordered_json p;
      p["kernel_h"] = c.kernel_h;
      p["kernel_w"] = c.kernel_w;
      p["stride"] = c.stride;
      p["padding"] = padding_to_json(c.padding);
      p["filters"] = c.filters;
      if (!c.use_bias) p["use_bias"] = false;
      return p;
    }
    ordered_json operator()(const layer::Pool2D& p2) const {
      ordered_json p;
      p["mode"] = pool_mode_name(p2.mode);
      p["kernel_h"] = p2.kernel_h;
      p["kernel_w"] = p2.kernel_w;
      p["stride"] = p2.stride;
      p["padding"] = padding_to_json(p2.padding);
      return p;
    }
    ordered_json operator()(const layer::GlobalPool& gp) const {
      ordered_json p;
      p["mode"] = pool_mode_name(gp.mode);
      return p;
    }
    ordered_json operator()(const layer::Dense& d) const {
      ordered_json p;
      p["units"] = d.units;
      if (!d.use_bias) p["use_bias"] = false;
      return p;
    }
    ordered_json operator()(const layer::Activation& a) const {
      ordered_json p;
      p["fn"] = activation_name(a.fn);
      return p;
    }
    ordered_json operator()(const layer::BatchNorm&) const { return ordered_json::object(); }
    ordered_json operator()(const layer::Dropout& d) const {
      ordered_json p;
      p["rate"] = d.rate;
      return p;
    }
    ordered_json operator()(const layer::Add&) const { return ordered_json::object(); }
    ordered_json operator()(const layer::Concat&) const { return ordered_json::object(); }
    ordered_json operator()(const layer::Flatten&) const { return ordered_json::object(); }
    ordered_json operator()(const layer::Identity&) const { return ordered_json::object(); }
  };
  return std::visit(Visitor{}, kind);
}

}  // namespace

NetworkGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level document must be an object");
  require_keys(doc, "", {"name", "input_shape", "nodes"});

  NetworkGraph g;
  g.name = get_string(doc, "", "name");

  const auto& shape = doc.at("input_shape");
  if (!shape.is_array() || shape.empty()) throw ParseError("input_shape must be a non-empty array");
  std::vector<std::int64_t> dims;
  for (const auto& d : shape) {
    if (!d.is_number_integer()) throw ParseError("input_shape entries must be integers");
    dims.push_back(d.get<std::int64_t>());
  }
  try {
    g.input_shape = TensorShape(dims);
  } catch (const ShapeError& e) {
    throw ParseError(std::string("bad input_shape: ") + e.what());
  }

  const auto& nodes = doc.at("nodes");
  if (!nodes.is_array()) throw ParseError("nodes must be an array");
  std::unordered_map<std::string, bool> seen;
  for (const auto& n : nodes) {
    if (!n.is_object()) throw ParseError("node entries must be objects");
    const std::string id_hint =
        n.contains("id") && n.at("id").is_string() ? n.at("id").get<std::string>() : "";
    require_keys(n, id_hint, {"id", "kind", "params", "inputs"});
    LayerNode node;
    node.id = get_string(n, id_hint, "id");
    if (node.id.empty()) throw ParseError("node ids must be non-empty");
    if (seen[node.id]) throw ParseError("duplicate id " + node.id);
    seen[node.id] = true;
    const auto& params = n.at("params");
    if (!params.is_object()) fail(node.id, "params must be an object");
    node.kind = parse_kind(get_string(n, node.id, "kind"), params, node.id);
    const auto& ins = n.at("inputs");
    if (!ins.is_array()) fail(node.id, "inputs must be an array");
    for (const auto& in : ins) {
      if (!in.is_string()) fail(node.id, "inputs entries must be strings");
      node.inputs.push_back(in.get<std::string>());
    }
    g.nodes.push_back(std::move(node));
  }
  return g;
}

std::string serialize_graph(const NetworkGraph& g) {
  ordered_json doc;
  doc["name"] = g.name;
  doc["input_shape"] = g.input_shape.dims();
  auto nodes = ordered_json::array();
  for (const auto& n : g.nodes) {
    ordered_json jn;
    jn["id"] = n.id;
    jn["kind"] = kind_name(n.kind);
    jn["params"] = params_to_json(n.kind);
    jn["inputs"] = n.inputs;
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

}  // namespace netalg
