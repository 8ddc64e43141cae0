#pragma once

#include <string>
#include <string_view>

#include "netalg/graph.hpp"

namespace netalg {

/// Parses the JSON interchange format:
///
///   {"name": string,
///    "input_shape": [h, w, c] or [d],
///    "nodes": [{"id": string, "kind": string, "params": object,
///               "inputs": [string, ...]}]}
///
/// Unknown fields are rejected at every level, including inside "params".
/// Throws ParseError naming the offending node id and field. The returned
/// graph is structurally complete but not validated or shape-inferred.
NetworkGraph parse_graph(std::string_view text);

/// Canonical, deterministic serialization; parse_graph(serialize_graph(g))
/// is structurally equal to g, and serializing twice is byte-identical.
std::string serialize_graph(const NetworkGraph& g);

}  // namespace netalg
