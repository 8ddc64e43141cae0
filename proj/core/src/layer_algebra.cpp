#include "netalg/layer_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netalg/errors.hpp"
#include "netalg/log2_ops.hpp"

namespace netalg {

std::string complexity_mode_name(ComplexityMode mode) {
  return mode == ComplexityMode::multiplicative ? "multiplicative" : "additive";
}

std::string power_merge_name(PowerMerge merge) { return merge == PowerMerge::max ? "max" : "sum"; }

ComplexityMode complexity_mode_from_name(const std::string& name) {
  if (name == "multiplicative") return ComplexityMode::multiplicative;
  if (name == "additive") return ComplexityMode::additive;
  throw ParseError("unknown complexity mode '" + name + "'");
}

PowerMerge power_merge_from_name(const std::string& name) {
  if (name == "max") return PowerMerge::max;
  if (name == "sum") return PowerMerge::sum;
  throw ParseError("unknown power merge '" + name + "'");
}

std::vector<double> propagate_power(const NetworkGraph& graph,
                                    const std::vector<LocalMetrics>& metrics,
                                    const PropagationConfig& config) {
  const auto idx = node_index(graph);
  std::vector<double> p_cum(graph.nodes.size(), 0.0);

  for (auto pos : topological_positions(graph)) {
    const auto& n = graph.nodes[pos];
    double p_in = 1.0;  // unit source signal u = 1
    if (n.inputs.size() == 1) {
      p_in = p_cum[idx.at(n.inputs[0])];
    } else if (n.inputs.size() > 1) {
      p_in = config.power_merge == PowerMerge::max ? -std::numeric_limits<double>::infinity() : 0.0;
      for (const auto& in : n.inputs) {
        const double v = p_cum[idx.at(in)];
        p_in = config.power_merge == PowerMerge::max ? std::max(p_in, v) : p_in + v;
      }
    }
    p_cum[pos] = p_in * metrics[pos].p_local;
  }
  return p_cum;
}

std::vector<double> propagate_complexity(const NetworkGraph& graph,
                                         const std::vector<LocalMetrics>& metrics,
                                         const PropagationConfig& config) {
  const auto idx = node_index(graph);
  const bool multiplicative = config.complexity_mode == ComplexityMode::multiplicative;
  std::vector<double> c_cum(graph.nodes.size(), 0.0);

  for (auto pos : topological_positions(graph)) {
    const auto& n = graph.nodes[pos];
    double c_in = 0.0;  // log2(1) in multiplicative mode, 0 in additive mode
    if (n.inputs.size() == 1) {
      c_in = c_cum[idx.at(n.inputs[0])];
    } else if (n.inputs.size() > 1) {
      c_in = multiplicative ? -std::numeric_limits<double>::infinity() : 0.0;
      for (const auto& in : n.inputs) {
        const double v = c_cum[idx.at(in)];
        c_in = multiplicative ? log2_sum2(c_in, v) : c_in + v;
      }
    }
    const auto& m = metrics[pos];
    if (multiplicative) {
      const double step = m.neutral ? 0.0 : std::max(0.0, std::log2(m.c_local));
      c_cum[pos] = c_in + step;
    } else {
      c_cum[pos] = c_in + m.c_local;
    }
  }
  return c_cum;
}

std::pair<double, double> global_sum(const std::vector<LocalMetrics>& metrics) {
  double gsip = 0.0;
  double gsc = 0.0;
  for (const auto& m : metrics) {
    gsip += m.p_local;
    gsc += m.c_local;
  }
  return {gsip, gsc};
}

GlobalMetrics global_metrics(const NetworkGraph& graph, const PropagationConfig& config,
                             const ActivationConstants& constants) {
  const auto metrics = all_node_metrics(graph, constants);
  const auto p_cum = propagate_power(graph, metrics, config);
  const auto c_cum = propagate_complexity(graph, metrics, config);
  const auto sink = sink_index(graph);
  const auto [gsip, gsc] = global_sum(metrics);

  GlobalMetrics g;
  g.gcip = p_cum[sink];
  g.gsip = gsip;
  g.gcc_log2 = c_cum[sink];
  g.gsc = gsc;
  g.gwc_log2 = gsc > 0.0 ? g.gcc_log2 + std::log2(gsc) : -std::numeric_limits<double>::infinity();
  g.params = count_params(graph);
  g.complexity_mode = config.complexity_mode;
  g.power_merge = config.power_merge;
  for (const auto& n : graph.nodes)
    if (!std::holds_alternative<layer::Input>(n.kind)) ++g.equivalent_layers;
  return g;
}

std::vector<CurveRow> cumulative_curves(const NetworkGraph& graph, const PropagationConfig& config,
                                        const ActivationConstants& constants) {
  const auto metrics = all_node_metrics(graph, constants);
  const auto p_cum = propagate_power(graph, metrics, config);
  const auto c_cum = propagate_complexity(graph, metrics, config);
  const auto depth = depth_index(graph);
  const auto order = topological_positions(graph);

  std::vector<std::size_t> topo_rank(graph.nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) topo_rank[order[r]] = r;

  std::vector<std::size_t> by_row(graph.nodes.size());
  for (std::size_t i = 0; i < by_row.size(); ++i) by_row[i] = i;
  std::sort(by_row.begin(), by_row.end(), [&](std::size_t a, std::size_t b) {
    const int da = depth.at(graph.nodes[a].id);
    const int db = depth.at(graph.nodes[b].id);
    if (da != db) return da < db;
    return topo_rank[a] < topo_rank[b];
  });

  std::vector<CurveRow> rows;
  rows.reserve(graph.nodes.size());
  for (auto i : by_row) {
    const auto& n = graph.nodes[i];
    rows.push_back({n.id, depth.at(n.id), kind_name(n.kind), metrics[i].p_local,
                    metrics[i].c_local, p_cum[i], c_cum[i]});
  }
  return rows;
}

}  // namespace netalg
