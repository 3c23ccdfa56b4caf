#include "gnns/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "gnns/errors.hpp"
#include "gnns/random.hpp"

namespace gnns {

namespace {

// Weighted undirected graph at one level of the hierarchy. `loop` holds the
// stored self weight e(i, i); `strength` includes it.
struct Level {
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;
  std::vector<double> loop;
  std::vector<double> strength;
  double total = 0.0;

  std::size_t size() const { return adjacency.size(); }
};

Level base_level(const Graph& g) {
  Level level;
  const std::size_t n = g.node_count();
  level.adjacency.resize(n);
  level.loop.assign(n, 0.0);
  level.strength.assign(n, 0.0);
  for (const Edge& e : g.arcs()) {
    level.strength[e.source] += e.weight;
    level.total += e.weight;
    if (e.source == e.target) {
      level.loop[e.source] += e.weight;
    } else {
      level.adjacency[e.source].emplace_back(e.target, e.weight);
    }
  }
  return level;
}

Level coarsen(const Level& fine, const std::vector<int>& community, std::size_t count) {
  Level coarse;
  coarse.adjacency.resize(count);
  coarse.loop.assign(count, 0.0);
  coarse.strength.assign(count, 0.0);
  coarse.total = fine.total;

  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t i = 0; i < fine.size(); ++i) {
    members[static_cast<std::size_t>(community[i])].push_back(i);
  }
  std::vector<double> weight_to(count, 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < count; ++c) {
    touched.clear();
    for (std::size_t i : members[c]) {
      coarse.loop[c] += fine.loop[i];
      coarse.strength[c] += fine.strength[i];
      for (auto [j, w] : fine.adjacency[i]) {
        const auto d = static_cast<std::size_t>(community[j]);
        if (d == c) {
          coarse.loop[c] += w;
          continue;
        }
        if (weight_to[d] == 0.0) touched.push_back(d);
        weight_to[d] += w;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t d : touched) {
      coarse.adjacency[c].emplace_back(d, weight_to[d]);
      weight_to[d] = 0.0;
    }
  }
  return coarse;
}

// Single-node moves at one level until a full pass changes nothing. Returns
// whether any node moved. `community` holds ids in [0, size).
bool local_moves(const Level& level, std::vector<int>& community, Rng& rng) {
  const std::size_t n = level.size();
  const double t = level.total;
  const double eps = 1e-12 * t;

  std::vector<double> community_strength(n, 0.0);
  std::vector<std::size_t> community_size(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    community_strength[static_cast<std::size_t>(community[i])] += level.strength[i];
    ++community_size[static_cast<std::size_t>(community[i])];
  }
  std::vector<std::size_t> free_ids;
  for (std::size_t c = n; c-- > 0;) {
    if (community_size[c] == 0) free_ids.push_back(c);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> links(n, 0.0);
  std::vector<std::size_t> neighbours;

  bool moved_any = false;
  bool moved = true;
  while (moved) {
    moved = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
      const auto own = static_cast<std::size_t>(community[i]);
      const double k = level.strength[i];

      neighbours.clear();
      for (auto [j, w] : level.adjacency[i]) {
        const auto c = static_cast<std::size_t>(community[j]);
        if (links[c] == 0.0) neighbours.push_back(c);
        links[c] += w;
      }

      community_strength[own] -= k;
      --community_size[own];

      // Proportional to the modularity change of inserting the isolated node.
      auto gain = [&](std::size_t c) { return links[c] - community_strength[c] * k / t; };
      std::size_t best = own;
      double best_gain = gain(own);
      for (std::size_t c : neighbours) {
        const double g = gain(c);
        if (g > best_gain + eps || (g >= best_gain - eps && c == own)) {
          best = c;
          best_gain = g;
        }
      }
      if (best_gain < -eps && community_size[own] > 0) {
        // Being alone beats every community on offer.
        best = free_ids.back();
        free_ids.pop_back();
        best_gain = 0.0;
      }

      if (community_size[own] == 0 && best != own) free_ids.push_back(own);
      community_strength[best] += k;
      ++community_size[best];
      community[i] = static_cast<int>(best);
      if (best != own) {
        moved = true;
        moved_any = true;
      }
      for (std::size_t c : neighbours) links[c] = 0.0;
    }
  }
  return moved_any;
}

}  // namespace

Partition louvain(const Graph& g, std::uint64_t seed) {
  if (g.directed()) {
    throw ConfigError("Louvain handles undirected graphs only; symmetrize the input first");
  }
  Rng rng = derive_rng(seed, 0);
  const Level base = base_level(g);
  std::vector<int> flat(g.node_count());
  std::iota(flat.begin(), flat.end(), 0);

  bool changed = true;
  while (changed) {
    changed = local_moves(base, flat, rng);
    std::size_t count = static_cast<std::size_t>(compact_labels(flat));
    Level level = coarsen(base, flat, count);
    while (level.size() > 1) {
      std::vector<int> community(level.size());
      std::iota(community.begin(), community.end(), 0);
      if (!local_moves(level, community, rng)) break;
      changed = true;
      count = static_cast<std::size_t>(compact_labels(community));
      for (int& l : flat) l = community[static_cast<std::size_t>(l)];
      level = coarsen(level, community, count);
    }
  }

  Partition result;
  result.communities = compact_labels(flat);
  result.labels = std::move(flat);
  result.score = partition_modularity(g, result.labels);
  return result;
}

}  // namespace gnns
