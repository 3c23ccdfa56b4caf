#pragma once

// Reference implementations used to cross-check the library. They work on a
// plain adjacency matrix and share no code with gnns_core.

#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "gnns/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency(const gnns::Graph& g) {
  const std::size_t n = g.node_count();
  Matrix e(n, std::vector<double>(n, 0.0));
  for (const gnns::Edge& a : g.arcs()) e[a.source][a.target] += a.weight;
  return e;
}

// q(i, j) = e(i, j)/T - w_out(i) w_in(j)/T^2, straight from the definition.
inline Matrix edge_scores(const Matrix& e) {
  const std::size_t n = e.size();
  std::vector<double> out(n, 0.0), in(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i] += e[i][j];
      in[j] += e[i][j];
      total += e[i][j];
    }
  }
  Matrix q(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      q[i][j] = e[i][j] / total - out[i] * in[j] / (total * total);
    }
  }
  return q;
}

inline Matrix edge_scores(const gnns::Graph& g) { return edge_scores(adjacency(g)); }

inline double labeling_score(const Matrix& q, const std::vector<int>& labels) {
  double m = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (labels[i] == labels[j]) m += q[i][j];
    }
  }
  return m;
}

// sum_{i,j} q(i, j) <c_i, c_j>
inline double soft_score(const Matrix& q, const Matrix& c) {
  double m = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      double dot = 0.0;
      for (std::size_t p = 0; p < c[i].size(); ++p) dot += c[i][p] * c[j][p];
      m += q[i][j] * dot;
    }
  }
  return m;
}

// Best score over every assignment of n nodes to n labels (n^n labelings,
// so only for tiny graphs).
inline double best_labeling_score(const Matrix& q) {
  const std::size_t n = q.size();
  std::vector<int> labels(n, 0);
  double best = -std::numeric_limits<double>::infinity();
  while (true) {
    best = std::max(best, labeling_score(q, labels));
    std::size_t k = 0;
    while (k < n && labels[k] == static_cast<int>(n) - 1) labels[k++] = 0;
    if (k == n) break;
    ++labels[k];
  }
  return best;
}

// Erdos-Renyi style graph with at least one edge; weights are 1 unless
// `weighted`, in which case they are drawn from [0.5, 3).
inline gnns::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng,
                                bool weighted = false, bool directed = false) {
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> w(0.5, 3.0);
  std::vector<gnns::Edge> edges;
  while (edges.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = directed ? 0 : i + 1; j < n; ++j) {
        if (i != j && coin(rng)) edges.push_back({i, j, weighted ? w(rng) : 1.0});
      }
    }
  }
  return gnns::Graph::from_edges(
      n, edges, directed ? gnns::Directedness::kDirected : gnns::Directedness::kUndirected);
}

inline gnns::Graph dumbbell() {
  const std::vector<gnns::Edge> edges{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1},
                                      {3, 4, 1}, {3, 5, 1}, {4, 5, 1}};
  return gnns::Graph::from_edges(6, edges, gnns::Directedness::kUndirected);
}

}  // namespace oracle
