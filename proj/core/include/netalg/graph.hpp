#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "netalg/layer_kind.hpp"
#include "netalg/tensor_shape.hpp"

namespace netalg {

/// One indivisible operation of the network.
struct LayerNode {
  std::string id;
  LayerKind kind;
  std::vector<std::string> inputs;
  /// Filled by infer_shapes; not part of structural equality.
  std::optional<TensorShape> out_shape;

  friend bool operator==(const LayerNode& a, const LayerNode& b) {
    return a.id == b.id && a.kind == b.kind && a.inputs == b.inputs;
  }
};

/// Immutable DAG of layer nodes. Nodes are kept in declaration order, which
/// also serves as the deterministic tie-break for traversals.
struct NetworkGraph {
  std::string name;
  TensorShape input_shape;
  std::vector<LayerNode> nodes;

  /// Structural equality: name, input shape and node structure. Inferred
  /// shapes are derived data and do not participate.
  friend bool operator==(const NetworkGraph& a, const NetworkGraph& b) {
    return a.name == b.name && a.input_shape == b.input_shape && a.nodes == b.nodes;
  }

  const LayerNode* find(const std::string& id) const;
};

enum class ViolationKind {
  duplicate_id,
  dangling_input,
  arity,
  input_count,
  multi_sink,
  cycle,
};

struct Violation {
  ViolationKind kind;
  std::string node_id;  // empty for graph-level violations
  std::string detail;
};

std::string violation_kind_name(ViolationKind kind);

/// Result of validate_graph. Violations are data, not failures; an empty
/// report means the graph is admissible for analysis.
struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural validation: unique ids, referenced inputs exist, arities
/// (Add/Concat >= 2 inputs, Input 0, all others exactly 1), exactly one
/// Input node, exactly one sink, acyclic.
ValidationReport validate_graph(const NetworkGraph& g);

/// Deterministic topological order: every node after all of its inputs,
/// ties broken by declaration order. Throws GraphError on cycles.
std::vector<std::string> topological_order(const NetworkGraph& g);

/// Longest-path depth per node: depth(Input) = 0, depth(n) = 1 + max over
/// inputs. Used as the x-coordinate of cumulative curves.
std::unordered_map<std::string, int> depth_index(const NetworkGraph& g);

/// Positions of nodes in the nodes vector keyed by id.
std::unordered_map<std::string, std::size_t> node_index(const NetworkGraph& g);

/// Node indices in deterministic topological order (declaration tie-break).
std::vector<std::size_t> topological_positions(const NetworkGraph& g);

/// Index of the unique sink node. Requires a validated graph.
std::size_t sink_index(const NetworkGraph& g);

}  // namespace netalg
