#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netalg/graph.hpp"
#include "netalg/local_metrics.hpp"

namespace netalg {

enum class ComplexityMode {
  /// Cumulative complexity is the running product of local capacities,
  /// carried as log2. Non-neutral factors below 1 are clamped to 1: a layer
  /// can add zero capacity but cannot erase upstream capacity.
  multiplicative,
  /// Cumulative complexity is the running sum of local capacities; a
  /// branch-free graph then accumulates exactly the global sum complexity.
  additive,
};

enum class PowerMerge { max, sum };

struct PropagationConfig {
  ComplexityMode complexity_mode = ComplexityMode::multiplicative;
  PowerMerge power_merge = PowerMerge::max;
};

std::string complexity_mode_name(ComplexityMode mode);
std::string power_merge_name(PowerMerge merge);
ComplexityMode complexity_mode_from_name(const std::string& name);
PowerMerge power_merge_from_name(const std::string& name);

/// Cumulative metric values per node, indexed by position in graph.nodes.
///
/// p_cum holds the cumulative intrinsic power (unit source signal u = 1 at
/// the input). c_cum holds the cumulative complexity: the log2 of the
/// cumulative value in multiplicative mode, the plain sum in additive mode.
struct CumulativeState {
  std::vector<double> p_cum;
  std::vector<double> c_cum;
};

/// Global metric bundle evaluated at the sink.
struct GlobalMetrics {
  double gcip = 1.0;      ///< cumulative intrinsic power at the sink
  double gsip = 0.0;      ///< topology-blind sum of local powers
  double gcc_log2 = 0.0;  ///< cumulative complexity at the sink (see CumulativeState)
  double gsc = 0.0;       ///< topology-blind sum of local complexities
  double gwc_log2 = 0.0;  ///< gcc_log2 + log2(gsc); -inf when gsc == 0
  std::int64_t equivalent_layers = 0;  ///< non-input node count
  std::int64_t params = 0;
  ComplexityMode complexity_mode = ComplexityMode::multiplicative;
  PowerMerge power_merge = PowerMerge::max;
};

/// One row of the cumulative curve table, ordered by (depth, topological
/// position).
struct CurveRow {
  std::string node_id;
  int depth = 0;
  std::string kind;
  double p_local = 1.0;
  double c_local = 0.0;
  double p_cum = 1.0;
  double c_cum = 0.0;
};

/// Propagates cumulative intrinsic power in topological order: a node reads
/// the value of its sole predecessor (duplicated at fan-out), merge nodes
/// combine predecessors by max (default) or sum, and the node multiplies by
/// its local power.
std::vector<double> propagate_power(const NetworkGraph& graph,
                                    const std::vector<LocalMetrics>& metrics,
                                    const PropagationConfig& config);

/// Propagates cumulative complexity. Multiplicative mode works in log2:
/// series steps add max(0, log2(c_local)) for non-neutral nodes, merges sum
/// the incoming linear-domain values via log-sum. Additive mode adds c_local
/// per node and sums at merges.
std::vector<double> propagate_complexity(const NetworkGraph& graph,
                                         const std::vector<LocalMetrics>& metrics,
                                         const PropagationConfig& config);

/// Topology-blind sums over all nodes: (gsip, gsc).
std::pair<double, double> global_sum(const std::vector<LocalMetrics>& metrics);

/// Runs both propagations and assembles the global bundle. Requires a
/// validated, shape-inferred graph.
GlobalMetrics global_metrics(const NetworkGraph& graph, const PropagationConfig& config,
                             const ActivationConstants& constants);

/// Per-node curve table for plotting cumulative trajectories.
std::vector<CurveRow> cumulative_curves(const NetworkGraph& graph,
                                        const PropagationConfig& config,
                                        const ActivationConstants& constants);

}  // namespace netalg
