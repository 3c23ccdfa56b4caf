#include "gnns/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnns/errors.hpp"

namespace gnns {

namespace {

std::vector<Edge> collapse(std::vector<Edge> arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  std::vector<Edge> out;
  out.reserve(arcs.size());
  for (const Edge& e : arcs) {
    if (!out.empty() && out.back().source == e.source && out.back().target == e.target) {
      out.back().weight += e.weight;
    } else {
      out.push_back(e);
    }
  }
  // Zero-weight arcs carry no information once collapsed.
  std::erase_if(out, [](const Edge& e) { return e.weight == 0.0; });
  return out;
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges, Directedness mode,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw DataError("graph has " + std::to_string(node_count) + " nodes but " +
                    std::to_string(labels.size()) + " labels");
  }
  std::vector<Edge> arcs;
  arcs.reserve(mode == Directedness::kUndirected ? 2 * edges.size() : edges.size());
  for (const Edge& e : edges) {
    if (e.source >= node_count || e.target >= node_count) {
      throw DataError("edge (" + std::to_string(e.source) + ", " + std::to_string(e.target) +
                      ") references a node outside [0, " + std::to_string(node_count) + ")");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw DataError("edge (" + std::to_string(e.source) + ", " + std::to_string(e.target) +
                      ") has invalid weight " + std::to_string(e.weight));
    }
    arcs.push_back(e);
    if (mode == Directedness::kUndirected) {
      arcs.push_back({e.target, e.source, e.weight});
    }
  }

  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  return from_relation(node_count, std::move(arcs), mode == Directedness::kDirected,
                       std::move(labels));
}

Graph Graph::from_relation(std::size_t node_count, std::vector<Edge> arcs, bool directed,
                           std::vector<std::string> labels) {
  Graph g;
  g.node_count_ = node_count;
  g.directed_ = directed;
  g.arcs_ = collapse(std::move(arcs));
  if (g.arcs_.empty()) {
    throw DataError("graph has no edge with positive weight");
  }
  for (const Edge& e : g.arcs_) g.total_weight_ += e.weight;
  g.labels_ = std::move(labels);
  return g;
}

double Graph::weight(std::size_t source, std::size_t target) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Edge{source, target, 0.0},
                             [](const Edge& a, const Edge& b) {
                               return a.source != b.source ? a.source < b.source
                                                           : a.target < b.target;
                             });
  if (it != arcs_.end() && it->source == source && it->target == target) return it->weight;
  return 0.0;
}

Graph Graph::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ConfigError("scale factor must be positive and finite");
  }
  Graph g = *this;
  g.total_weight_ = 0.0;
  for (Edge& e : g.arcs_) {
    e.weight *= factor;
    g.total_weight_ += e.weight;
  }
  return g;
}

NodeStrengths node_strengths(const Graph& g) {
  NodeStrengths s;
  s.out.assign(g.node_count(), 0.0);
  s.in.assign(g.node_count(), 0.0);
  for (const Edge& e : g.arcs()) {
    s.out[e.source] += e.weight;
    s.in[e.target] += e.weight;
    s.total += e.weight;
  }
  if (!(s.total > 0.0)) {
    throw DataError("total edge weight is zero");
  }
  return s;
}

Graph symmetrize(const Graph& g) {
  // Undirected construction adds every arc in both directions: e + e^T.
  return Graph::from_edges(g.node_count(), g.arcs(), Directedness::kUndirected, g.node_labels());
}

Graph aggregate(std::span<const Graph> graphs) {
  if (graphs.empty()) {
    throw ConfigError("cannot aggregate an empty list of graphs");
  }
  const Graph& first = graphs.front();
  bool directed = false;
  std::vector<Edge> arcs;
  for (const Graph& g : graphs) {
    if (g.node_count() != first.node_count() || g.node_labels() != first.node_labels()) {
      throw DataError("graphs do not share a node space");
    }
    directed = directed || g.directed();
    arcs.insert(arcs.end(), g.arcs().begin(), g.arcs().end());
  }
  return Graph::from_relation(first.node_count(), std::move(arcs), directed, first.node_labels());
}

}  // namespace gnns
