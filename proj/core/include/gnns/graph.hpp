#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gnns {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Directedness { kDirected, kUndirected };

/// Weighted, optionally directed graph with dense 0-based node indices.
///
/// The edge relation e(i, j) is stored explicitly as a list of arcs sorted by
/// (source, target) with duplicates collapsed. An undirected graph stores both
/// (i, j) and (j, i) with equal weight, so sums over the stored arcs always
/// produce the matrix quantities used by modularity.
class Graph {
 public:
  /// Builds a graph from raw arcs. Repeated arcs accumulate. For undirected
  /// input every arc (i, j, w) adds w to both e(i, j) and e(j, i); a self-loop
  /// therefore adds 2w to e(i, i).
  ///
  /// Throws DataError on an index >= node_count, a negative or non-finite
  /// weight, or when no arc has positive weight. An empty `labels` means
  /// labels are the decimal indices.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          Directedness mode, std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return node_count_; }
  bool directed() const noexcept { return directed_; }
  std::span<const Edge> arcs() const noexcept { return arcs_; }
  const std::vector<std::string>& node_labels() const noexcept { return labels_; }

  /// e(i, j); zero when absent.
  double weight(std::size_t source, std::size_t target) const;
  double total_weight() const noexcept { return total_weight_; }

  /// Same topology with every weight multiplied by `factor` (> 0).
  Graph scaled(double factor) const;

 private:
  Graph() = default;
  // Takes arcs as the stored relation e(i, j) without mirroring.
  static Graph from_relation(std::size_t node_count, std::vector<Edge> arcs, bool directed,
                             std::vector<std::string> labels);
  friend Graph aggregate(std::span<const Graph> graphs);

  std::size_t node_count_ = 0;
  bool directed_ = false;
  std::vector<Edge> arcs_;
  std::vector<std::string> labels_;
  double total_weight_ = 0.0;
};

struct NodeStrengths {
  std::vector<double> out;
  std::vector<double> in;
  double total = 0.0;
};

/// Out/in strengths and total weight T. Throws DataError when T == 0.
NodeStrengths node_strengths(const Graph& g);

/// Undirected graph with e'(i, j) = e(i, j) + e(j, i).
Graph symmetrize(const Graph& g);

/// Edge-weight sum of graphs sharing one node space (same count and labels).
/// The result is directed if any input is. Throws DataError on mismatch.
Graph aggregate(std::span<const Graph> graphs);

enum class GraphFormat { kEdgeList, kPajek };

/// Parses "edgelist" or "pajek"; throws ConfigError otherwise.
GraphFormat parse_graph_format(const std::string& name);

/// Reads a graph file.
///
/// Edge list: whitespace-separated `src dst [weight]` per line; `#` and `%`
/// start comment lines. If every identifier is an integer the dense index
/// follows numeric order, otherwise order of first appearance. Defaults to
/// undirected when `treat_as` is empty.
///
/// Pajek: `*Vertices N` followed by `*Edges` / `*Arcs` (or their `list`
/// variants). Without `treat_as` the sections decide: arcs are directed,
/// edges count in both directions.
Graph load_graph(const std::filesystem::path& path, GraphFormat format,
                 std::optional<Directedness> treat_as = std::nullopt);

/// Same as load_graph but from an in-memory document; `source` names it in
/// error messages.
Graph parse_graph(const std::string& text, GraphFormat format,
                  std::optional<Directedness> treat_as = std::nullopt,
                  const std::string& source = "<memory>");

/// Writes a Pajek document that round-trips through load_graph. Undirected
/// graphs are written as `*Edges` with each pair once.
void write_pajek(const std::filesystem::path& path, const Graph& g);

}  // namespace gnns
