#include "netalg/model_zoo.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "netalg/errors.hpp"

namespace netalg {
namespace {

/// Chain-friendly graph assembly: add() wires the new node to the current
/// tail unless explicit inputs are given.
class GraphBuilder {
 public:
  GraphBuilder(std::string name, TensorShape input_shape) {
    g_.name = std::move(name);
    g_.input_shape = std::move(input_shape);
    g_.nodes.push_back({"input", layer::Input{}, {}, std::nullopt});
    tail_ = "input";
  }

  const std::string& tail() const { return tail_; }

  std::string add(std::string id, LayerKind kind, std::vector<std::string> inputs = {}) {
    if (inputs.empty() && !std::holds_alternative<layer::Input>(kind)) inputs = {tail_};
    g_.nodes.push_back({id, std::move(kind), std::move(inputs), std::nullopt});
    tail_ = id;
    return id;
  }

  NetworkGraph finish() { return std::move(g_); }

 private:
  NetworkGraph g_;
  std::string tail_;
};

layer::Conv2D conv(int kernel, int stride, int pad, int filters, bool bias) {
  return {kernel, kernel, stride, Padding::explicit_pad(pad, pad), filters, bias};
}

struct ResNetConfig {
  bool bottleneck = false;
  std::array<int, 4> blocks{};
};

ResNetConfig resnet_config(int depth) {
  switch (depth) {
    case 18: return {false, {2, 2, 2, 2}};
    case 34: return {false, {3, 4, 6, 3}};
    case 50: return {true, {3, 4, 6, 3}};
    case 101: return {true, {3, 4, 23, 3}};
    case 152: return {true, {3, 8, 36, 3}};
    default: throw GraphError("resnet depth must be one of 18, 34, 50, 101, 152");
  }
}

NetworkGraph build_resnet_family(int depth, bool with_shortcuts) {
  const auto cfg = resnet_config(depth);
  const int expansion = cfg.bottleneck ? 4 : 1;
  const std::string family = with_shortcuts ? "resnet" : "plainnet";

  GraphBuilder b(family + std::to_string(depth), TensorShape{224, 224, 3});
  b.add("conv1", conv(7, 2, 3, 64, false));
  b.add("bn1", layer::BatchNorm{});
  b.add("relu1", layer::Activation{ActivationFn::relu});
  b.add("maxpool", layer::Pool2D{PoolMode::max, 3, 3, 2, Padding::explicit_pad(1, 1)});

  int in_channels = 64;
  for (int stage = 0; stage < 4; ++stage) {
    const int planes = 64 << stage;
    for (int block = 0; block < cfg.blocks[static_cast<std::size_t>(stage)]; ++block) {
      const int stride = (stage > 0 && block == 0) ? 2 : 1;
      const std::string p = "l" + std::to_string(stage + 1) + "b" + std::to_string(block) + "_";
      const std::string block_in = b.tail();
      const int out_channels = planes * expansion;

      if (cfg.bottleneck) {
        b.add(p + "conv1", conv(1, 1, 0, planes, false));
        b.add(p + "bn1", layer::BatchNorm{});
        b.add(p + "relu1", layer::Activation{ActivationFn::relu});
        b.add(p + "conv2", conv(3, stride, 1, planes, false));
        b.add(p + "bn2", layer::BatchNorm{});
        b.add(p + "relu2", layer::Activation{ActivationFn::relu});
        b.add(p + "conv3", conv(1, 1, 0, out_channels, false));
        b.add(p + "bn3", layer::BatchNorm{});
      } else {
        b.add(p + "conv1", conv(3, stride, 1, planes, false));
        b.add(p + "bn1", layer::BatchNorm{});
        b.add(p + "relu1", layer::Activation{ActivationFn::relu});
        b.add(p + "conv2", conv(3, 1, 1, planes, false));
        b.add(p + "bn2", layer::BatchNorm{});
      }

      if (with_shortcuts) {
        const std::string main_out = b.tail();
        std::string shortcut_out;
        if (stride != 1 || in_channels != out_channels) {
          b.add(p + "ds_conv", conv(1, stride, 0, out_channels, false), {block_in});
          shortcut_out = b.add(p + "ds_bn", layer::BatchNorm{});
        } else {
          shortcut_out = b.add(p + "shortcut", layer::Identity{}, {block_in});
        }
        b.add(p + "add", layer::Add{}, {main_out, shortcut_out});
      }
      b.add(p + "out", layer::Activation{ActivationFn::relu});
      in_channels = out_channels;
    }
  }

  b.add("gap", layer::GlobalPool{PoolMode::avg});
  b.add("flatten", layer::Flatten{});
  b.add("fc", layer::Dense{1000, true});
  b.add("softmax", layer::Activation{ActivationFn::softmax});
  return b.finish();
}

}  // namespace

NetworkGraph build_mlp(const std::vector<int>& layer_widths, ActivationFn activation) {
  if (layer_widths.size() < 2) throw GraphError("build_mlp needs at least two widths");
  GraphBuilder b("mlp", TensorShape{layer_widths.front()});
  for (std::size_t i = 1; i < layer_widths.size(); ++i) {
    b.add("dense" + std::to_string(i), layer::Dense{layer_widths[i], true});
    if (i + 1 < layer_widths.size())
      b.add("act" + std::to_string(i), layer::Activation{activation});
  }
  return b.finish();
}

NetworkGraph build_autoencoder(const std::vector<int>& widths) {
  if (widths.size() < 2) throw GraphError("build_autoencoder needs at least two widths");
  for (std::size_t i = 0; i < widths.size(); ++i)
    if (widths[i] != widths[widths.size() - 1 - i])
      throw GraphError("autoencoder widths must be palindromic");

  GraphBuilder b("autoencoder", TensorShape{widths.front()});
  for (std::size_t i = 1; i < widths.size(); ++i) {
    b.add("dense" + std::to_string(i), layer::Dense{widths[i], true});
    b.add("act" + std::to_string(i), layer::Activation{ActivationFn::linear});
  }
  return b.finish();
}

NetworkGraph build_vgg(int variant) {
  // Convolution widths per pooling stage.
  std::vector<std::vector<int>> stages;
  switch (variant) {
    case 11: stages = {{64}, {128}, {256, 256}, {512, 512}, {512, 512}}; break;
    case 13: stages = {{64, 64}, {128, 128}, {256, 256}, {512, 512}, {512, 512}}; break;
    case 16:
      stages = {{64, 64}, {128, 128}, {256, 256, 256}, {512, 512, 512}, {512, 512, 512}};
      break;
    case 19:
      stages = {{64, 64}, {128, 128}, {256, 256, 256, 256}, {512, 512, 512, 512},
                {512, 512, 512, 512}};
      break;
    default: throw GraphError("vgg variant must be one of 11, 13, 16, 19");
  }

  GraphBuilder b("vgg" + std::to_string(variant), TensorShape{224, 224, 3});
  int conv_id = 0;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    for (int width : stages[s]) {
      ++conv_id;
      b.add("conv" + std::to_string(conv_id), conv(3, 1, 1, width, true));
      b.add("relu" + std::to_string(conv_id), layer::Activation{ActivationFn::relu});
    }
    b.add("pool" + std::to_string(s + 1),
          layer::Pool2D{PoolMode::max, 2, 2, 2, Padding::valid()});
  }
  b.add("flatten", layer::Flatten{});
  b.add("fc1", layer::Dense{4096, true});
  b.add("fc1_relu", layer::Activation{ActivationFn::relu});
  b.add("fc1_drop", layer::Dropout{0.5});
  b.add("fc2", layer::Dense{4096, true});
  b.add("fc2_relu", layer::Activation{ActivationFn::relu});
  b.add("fc2_drop", layer::Dropout{0.5});
  b.add("fc3", layer::Dense{1000, true});
  b.add("softmax", layer::Activation{ActivationFn::softmax});
  return b.finish();
}

NetworkGraph build_resnet(int depth) { return build_resnet_family(depth, true); }

NetworkGraph build_plainnet(int depth) { return build_resnet_family(depth, false); }

namespace {

std::vector<int> parse_widths(const std::string& name, std::size_t prefix_len) {
  std::vector<int> widths;
  std::stringstream ss(name.substr(prefix_len));
  std::string part;
  while (std::getline(ss, part, '-')) {
    int w = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), w);
    if (ec != std::errc{} || ptr != part.data() + part.size() || w < 1)
      throw GraphError("bad width '" + part + "' in model name '" + name + "'");
    widths.push_back(w);
  }
  return widths;
}

}  // namespace

NetworkGraph build_by_name(const std::string& name) {
  auto depth_of = [&](std::size_t prefix) {
    int d = 0;
    const char* end = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(name.data() + prefix, end, d);
    if (ec != std::errc{} || ptr != end) throw GraphError("unknown model name '" + name + "'");
    return d;
  };
  if (name.rfind("resnet", 0) == 0 && name.size() > 6) return build_resnet(depth_of(6));
  if (name.rfind("plainnet", 0) == 0 && name.size() > 8) return build_plainnet(depth_of(8));
  if (name.rfind("vgg", 0) == 0 && name.size() > 3) return build_vgg(depth_of(3));
  if (name == "autoencoder") return build_autoencoder({64, 32, 16, 8, 16, 32, 64});
  if (name.rfind("autoencoder-", 0) == 0) return build_autoencoder(parse_widths(name, 12));
  if (name.rfind("mlp-", 0) == 0) return build_mlp(parse_widths(name, 4), ActivationFn::relu);
  throw GraphError("unknown model name '" + name + "'");
}

std::vector<std::string> zoo_names() {
  return {"resnet18",   "resnet34",   "resnet50",   "resnet101",   "resnet152",
          "plainnet18", "plainnet34", "plainnet50", "plainnet101", "plainnet152",
          "vgg11",      "vgg13",      "vgg16",      "vgg19",       "autoencoder"};
}

std::vector<std::pair<std::string, std::string>> builder_manifest_pairs() {
  return {{"resnet18", "ResNet 18"},   {"resnet34", "ResNet 34"}, {"resnet50", "ResNet 50"},
          {"resnet101", "ResNet 101"}, {"resnet152", "ResNet 152"}, {"vgg11", "VGG 11"},
          {"vgg13", "VGG 13"},         {"vgg16", "VGG 16"},       {"vgg19", "VGG 19"}};
}

}  // namespace netalg
