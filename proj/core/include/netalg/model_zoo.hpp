#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netalg/graph.hpp"

namespace netalg {

/// One published accuracy row from the embedded manifest.
struct ModelRecord {
  std::string name;
  std::string family;
  std::string source;  // table1 | table2 | table3
  std::optional<double> top1;
  std::optional<double> top5;
  std::optional<std::int64_t> params;
};

/// Input -> alternating Dense/Activation chain; the final Dense has no
/// activation. Needs at least two widths (input plus one layer).
NetworkGraph build_mlp(const std::vector<int>& layer_widths, ActivationFn activation);

/// Symmetric Dense chain with linear activations. Widths must be
/// palindromic; throws GraphError otherwise.
NetworkGraph build_autoencoder(const std::vector<int>& widths);

/// Standard VGG for 224x224x3 input with a 1000-class softmax head.
/// Variant is one of 11, 13, 16, 19.
NetworkGraph build_vgg(int variant);

/// Standard ResNet for 224x224x3: basic blocks for depths 18/34, bottleneck
/// blocks for 50/101/152. Identity shortcuts are explicit Identity nodes,
/// downsample shortcuts 1x1 convolutions, merges Add nodes; the head is
/// global average pool, 1000-class Dense and softmax.
NetworkGraph build_resnet(int depth);

/// The shortcut-free counterpart of build_resnet(depth): same processing
/// blocks as a pure chain, with shortcut branches, downsample convolutions
/// and Add nodes removed.
NetworkGraph build_plainnet(int depth);

/// All rows of the embedded accuracy manifest (NA/NaN mapped to absent).
const std::vector<ModelRecord>& load_manifest();

/// Builds a zoo model by name: resnet{18,34,50,101,152},
/// plainnet{18,34,50,101,152}, vgg{11,13,16,19}, autoencoder (the canonical
/// 64-32-16-8-16-32-64), autoencoder-<w>-<w>-..., mlp-<w>-<w>-... (relu).
/// Throws GraphError for unknown names.
NetworkGraph build_by_name(const std::string& name);

/// Canonical fixed zoo names (excludes the parameterized mlp-/autoencoder-
/// forms).
std::vector<std::string> zoo_names();

/// Zoo names paired with their manifest row (source table1) for models that
/// have published accuracies: the ResNet and VGG families.
std::vector<std::pair<std::string, std::string>> builder_manifest_pairs();

}  // namespace netalg
