#pragma once

#include "netalg/graph.hpp"

namespace netalg {

/// Returns a copy of the graph with every node's out_shape filled.
///
/// Spatial rule for conv/pool: out = floor((in + 2*pad - kernel)/stride) + 1.
/// Transpose conv: out = (in - 1)*stride - 2*pad + kernel. "same" padding
/// resolves to floor(kernel/2) per side and is only defined for odd kernels.
///
/// Requires validate_graph(g).ok(); throws ShapeError on inconsistent
/// shapes (Add mismatch, non-positive dims, Dense on non-flat input).
NetworkGraph infer_shapes(const NetworkGraph& g);

/// Resolved padding amounts for a window of the given size.
std::pair<int, int> resolve_padding(const Padding& pad, int kernel_h, int kernel_w);

}  // namespace netalg
