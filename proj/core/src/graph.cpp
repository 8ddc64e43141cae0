#include "netalg/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "netalg/errors.hpp"

namespace netalg {

const LayerNode* NetworkGraph::find(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

std::string violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_id: return "duplicate_id";
    case ViolationKind::dangling_input: return "dangling_input";
    case ViolationKind::arity: return "arity";
    case ViolationKind::input_count: return "input_count";
    case ViolationKind::multi_sink: return "multi_sink";
    case ViolationKind::cycle: return "cycle";
  }
  return "unknown";
}

std::unordered_map<std::string, std::size_t> node_index(const NetworkGraph& g) {
  std::unordered_map<std::string, std::size_t> idx;
  idx.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) idx.emplace(g.nodes[i].id, i);
  return idx;
}

ValidationReport validate_graph(const NetworkGraph& g) {
  ValidationReport report;
  auto add = [&](ViolationKind k, const std::string& id, std::string detail) {
    report.violations.push_back({k, id, std::move(detail)});
  };

  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    if (!idx.emplace(n.id, i).second) add(ViolationKind::duplicate_id, n.id, "duplicate id " + n.id);
  }

  int input_nodes = 0;
  for (const auto& n : g.nodes) {
    const std::size_t arity = n.inputs.size();
    if (std::holds_alternative<layer::Input>(n.kind)) {
      ++input_nodes;
      if (arity != 0) add(ViolationKind::arity, n.id, "input node must have 0 inputs");
    } else if (is_merge(n.kind)) {
      if (arity < 2)
        add(ViolationKind::arity, n.id,
            kind_name(n.kind) + " node needs >= 2 inputs, has " + std::to_string(arity));
    } else if (arity != 1) {
      add(ViolationKind::arity, n.id,
          kind_name(n.kind) + " node needs exactly 1 input, has " + std::to_string(arity));
    }
    for (const auto& in : n.inputs)
      if (!idx.count(in)) add(ViolationKind::dangling_input, n.id, "unknown input id " + in);
  }
  if (input_nodes != 1)
    add(ViolationKind::input_count, "",
        "graph must have exactly one input node, has " + std::to_string(input_nodes));

  // Sink detection over resolvable edges.
  std::unordered_set<std::string> consumed;
  for (const auto& n : g.nodes)
    for (const auto& in : n.inputs) consumed.insert(in);
  std::vector<std::string> sinks;
  for (const auto& n : g.nodes)
    if (!consumed.count(n.id)) sinks.push_back(n.id);
  if (sinks.size() != 1) {
    std::string detail = "graph must have exactly one sink, has " + std::to_string(sinks.size());
    add(ViolationKind::multi_sink, sinks.empty() ? "" : sinks.front(), detail);
  }

  // Kahn pass; leftover nodes sit on a cycle.
  std::vector<int> pending(g.nodes.size(), 0);
  std::vector<std::vector<std::size_t>> consumers(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& in : g.nodes[i].inputs) {
      auto it = idx.find(in);
      if (it == idx.end()) continue;
      ++pending[i];
      consumers[it->second].push_back(i);
    }
  }
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (pending[i] == 0) ready.push(i);
  std::size_t visited = 0;
  while (!ready.empty()) {
    std::size_t i = ready.front();
    ready.pop();
    ++visited;
    for (auto c : consumers[i])
      if (--pending[c] == 0) ready.push(c);
  }
  if (visited != g.nodes.size()) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (pending[i] > 0) {
        add(ViolationKind::cycle, g.nodes[i].id, "node participates in a cycle");
        break;  // one report per cycle is enough
      }
  }
  return report;
}

std::vector<std::size_t> topological_positions(const NetworkGraph& g) {
  auto idx = node_index(g);
  if (idx.size() != g.nodes.size()) throw GraphError("graph has duplicate node ids");

  std::vector<int> pending(g.nodes.size(), 0);
  std::vector<std::vector<std::size_t>> consumers(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& in : g.nodes[i].inputs) {
      auto it = idx.find(in);
      if (it == idx.end()) throw GraphError("unknown input id " + in);
      ++pending[i];
      consumers[it->second].push_back(i);
    }
  }
  // Min-heap on declaration position keeps ties deterministic.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (pending[i] == 0) ready.push(i);

  std::vector<std::size_t> order;
  order.reserve(g.nodes.size());
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (auto c : consumers[i])
      if (--pending[c] == 0) ready.push(c);
  }
  if (order.size() != g.nodes.size()) throw GraphError("graph contains a cycle");
  return order;
}

std::vector<std::string> topological_order(const NetworkGraph& g) {
  std::vector<std::string> ids;
  ids.reserve(g.nodes.size());
  for (auto pos : topological_positions(g)) ids.push_back(g.nodes[pos].id);
  return ids;
}

std::unordered_map<std::string, int> depth_index(const NetworkGraph& g) {
  auto idx = node_index(g);
  std::unordered_map<std::string, int> depth;
  depth.reserve(g.nodes.size());
  for (auto pos : topological_positions(g)) {
    const auto& n = g.nodes[pos];
    int d = 0;
    for (const auto& in : n.inputs) d = std::max(d, depth.at(in) + 1);
    depth[n.id] = d;
  }
  return depth;
}

std::size_t sink_index(const NetworkGraph& g) {
  std::unordered_set<std::string> consumed;
  for (const auto& n : g.nodes)
    for (const auto& in : n.inputs) consumed.insert(in);
  std::vector<std::size_t> sinks;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (!consumed.count(g.nodes[i].id)) sinks.push_back(i);
  if (sinks.size() != 1) throw GraphError("graph must have exactly one sink");
  return sinks.front();
}

}  // namespace netalg
