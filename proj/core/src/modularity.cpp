#include "gnns/modularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gnns/errors.hpp"

namespace gnns {

namespace {

constexpr double kMoveTolerance = 1e-13;

void check_labels(std::span<const int> labels, std::size_t n) {
  if (labels.size() != n) {
    throw DataError("labeling has " + std::to_string(labels.size()) + " entries for " +
                    std::to_string(n) + " nodes");
  }
  for (int l : labels) {
    if (l < 0 || static_cast<std::size_t>(l) >= std::max<std::size_t>(n, 1)) {
      throw DataError("community label " + std::to_string(l) + " out of range");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// AttachmentMatrix

AttachmentMatrix AttachmentMatrix::from_labels(std::span<const int> labels,
                                               std::size_t communities) {
  DenseMatrix values = DenseMatrix::Zero(static_cast<Eigen::Index>(labels.size()),
                                         static_cast<Eigen::Index>(communities));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= communities) {
      throw DataError("label " + std::to_string(labels[i]) + " does not fit in " +
                      std::to_string(communities) + " communities");
    }
    values(static_cast<Eigen::Index>(i), labels[i]) = 1.0;
  }
  return AttachmentMatrix(std::move(values));
}

bool AttachmentMatrix::is_row_stochastic(double tolerance) const {
  for (Eigen::Index i = 0; i < values_.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < values_.cols(); ++p) {
      double v = values_(i, p);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0 + tolerance) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tolerance) return false;
  }
  return true;
}

std::vector<int> AttachmentMatrix::argmax_labels() const {
  std::vector<int> labels(nodes(), 0);
  for (Eigen::Index i = 0; i < values_.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index p = 1; p < values_.cols(); ++p) {
      if (values_(i, p) > values_(i, best)) best = p;
    }
    labels[static_cast<std::size_t>(i)] = static_cast<int>(best);
  }
  return labels;
}

// ---------------------------------------------------------------------------
// ModularityMatrix

ModularityMatrix ModularityMatrix::from_scores(DenseMatrix q, bool diagonal_zeroed,
                                               double removed_diagonal) {
  if (q.rows() != q.cols()) {
    throw DataError("modularity matrix must be square");
  }
  ModularityMatrix mm;
  mm.diagonal_zeroed_ = diagonal_zeroed;
  mm.removed_diagonal_ = removed_diagonal;
  mm.symmetric_ = q == q.transpose();
  if (diagonal_zeroed) q.diagonal().setZero();
  mm.q_ = std::move(q);
  return mm;
}

ModularityMatrix ModularityMatrix::with_zero_diagonal() const {
  if (diagonal_zeroed_) return *this;
  ModularityMatrix mm = *this;
  mm.removed_diagonal_ = q_.diagonal().sum();
  mm.q_.diagonal().setZero();
  mm.diagonal_zeroed_ = true;
  return mm;
}

ModularityMatrix modularity_matrix(const Graph& g, bool zero_diagonal) {
  const NodeStrengths s = node_strengths(g);
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const double t = s.total;

  Eigen::VectorXd out = Eigen::Map<const Eigen::VectorXd>(s.out.data(), n) / t;
  Eigen::VectorXd in = Eigen::Map<const Eigen::VectorXd>(s.in.data(), n) / t;
  DenseMatrix q = -(out * in.transpose());
  for (const Edge& e : g.arcs()) {
    q(static_cast<Eigen::Index>(e.source), static_cast<Eigen::Index>(e.target)) += e.weight / t;
  }
  // Undirected input yields a symmetric matrix up to rounding; make it exact so
  // transposed products agree bit for bit.
  if (!g.directed()) q = 0.5 * (q + q.transpose()).eval();

  ModularityMatrix mm = ModularityMatrix::from_scores(std::move(q), false);
  return zero_diagonal ? mm.with_zero_diagonal() : mm;
}

// ---------------------------------------------------------------------------
// Partitions

int compact_labels(std::vector<int>& labels) {
  std::vector<int> remap;
  int next = 0;
  for (int& l : labels) {
    if (l < 0) throw DataError("negative community label");
    if (static_cast<std::size_t>(l) >= remap.size()) remap.resize(static_cast<std::size_t>(l) + 1, -1);
    int& slot = remap[static_cast<std::size_t>(l)];
    if (slot < 0) slot = next++;
    l = slot;
  }
  return next;
}

double partition_modularity(const ModularityMatrix& mm, std::span<const int> labels) {
  const std::size_t n = mm.size();
  check_labels(labels, n);
  const DenseMatrix& q = mm.scores();
  double total = mm.diagonal_zeroed() ? mm.removed_diagonal() : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = q.row(static_cast<Eigen::Index>(i));
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i] == labels[j]) acc += row(static_cast<Eigen::Index>(j));
    }
    total += acc;
  }
  return total;
}

double partition_modularity(const Graph& g, std::span<const int> labels) {
  const std::size_t n = g.node_count();
  check_labels(labels, n);
  const NodeStrengths s = node_strengths(g);
  const auto m = static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;
  std::vector<double> inner(m, 0.0), out(m, 0.0), in(m, 0.0);
  for (const Edge& e : g.arcs()) {
    if (labels[e.source] == labels[e.target]) inner[static_cast<std::size_t>(labels[e.source])] += e.weight;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(labels[i])] += s.out[i];
    in[static_cast<std::size_t>(labels[i])] += s.in[i];
  }
  double score = 0.0;
  for (std::size_t c = 0; c < m; ++c) {
    score += inner[c] / s.total - out[c] * in[c] / (s.total * s.total);
  }
  return score;
}

double soft_modularity(const ModularityMatrix& mm, const AttachmentMatrix& c) {
  if (c.nodes() != mm.size()) {
    throw DataError("attachment has " + std::to_string(c.nodes()) + " rows for a " +
                    std::to_string(mm.size()) + "-node matrix");
  }
  const DenseMatrix qc = mm.scores() * c.values();
  return c.values().cwiseProduct(qc).sum();
}

Partition binarize(const AttachmentMatrix& c, const ModularityMatrix& mm) {
  const auto n = static_cast<Eigen::Index>(mm.size());
  if (static_cast<Eigen::Index>(c.nodes()) != n) {
    throw DataError("attachment and modularity matrix sizes differ");
  }
  const auto m = static_cast<Eigen::Index>(c.communities());
  const DenseMatrix& q = mm.scores();

  // Coupling s(i, j) = q(i, j) + q(j, i) off the diagonal. With the diagonal
  // excluded, the score is linear in any single row with coefficients
  // gain(i, .) = sum_j s(i, j) x(j, .).
  DenseMatrix s = q + q.transpose();
  s.diagonal().setZero();
  DenseMatrix x = c.values();
  DenseMatrix gain = s * x;

  const std::vector<int> hint = c.argmax_labels();
  std::vector<int> labels(static_cast<std::size_t>(n), 0);

  Eigen::RowVectorXd delta(m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = gain.row(i);
    Eigen::Index best = 0;
    for (Eigen::Index p = 1; p < m; ++p) {
      if (row(p) > row(best)) best = p;
    }
    const Eigen::Index preferred = hint[static_cast<std::size_t>(i)];
    if (row(preferred) >= row(best) - kMoveTolerance) best = preferred;
    labels[static_cast<std::size_t>(i)] = static_cast<int>(best);

    delta = -x.row(i);
    delta(best) += 1.0;
    x.row(i).setZero();
    x(i, best) = 1.0;
    // Row i of `gain` is unaffected because s(i, i) = 0.
    gain.noalias() += s.col(i) * delta;
  }

  bool moved = true;
  while (moved) {
    moved = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto row = gain.row(i);
      const Eigen::Index current = labels[static_cast<std::size_t>(i)];
      Eigen::Index best = 0;
      for (Eigen::Index p = 1; p < m; ++p) {
        if (row(p) > row(best)) best = p;
      }
      if (row(best) > row(current) + kMoveTolerance) {
        gain.col(current) -= s.col(i);
        gain.col(best) += s.col(i);
        labels[static_cast<std::size_t>(i)] = static_cast<int>(best);
        moved = true;
      }
    }
  }

  Partition result;
  result.communities = compact_labels(labels);
  result.labels = std::move(labels);
  result.score = partition_modularity(mm, result.labels);
  return result;
}

double best_single_move_gain(const Graph& g, std::span<const int> labels) {
  const std::size_t n = g.node_count();
  check_labels(labels, n);
  const NodeStrengths s = node_strengths(g);
  const double t = s.total;
  const auto m = static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;

  std::vector<double> inner(m, 0.0), out(m, 0.0), in(m, 0.0);
  std::vector<double> loop(n, 0.0);
  for (const Edge& e : g.arcs()) {
    if (e.source == e.target) loop[e.source] += e.weight;
    if (labels[e.source] == labels[e.target]) inner[static_cast<std::size_t>(labels[e.source])] += e.weight;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(labels[i])] += s.out[i];
    in[static_cast<std::size_t>(labels[i])] += s.in[i];
  }

  // links[c] = weight of arcs between node i and community c in either
  // direction, self-loops excluded.
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency(n);
  for (const Edge& e : g.arcs()) {
    if (e.source == e.target) continue;
    adjacency[e.source].emplace_back(e.target, e.weight);
    adjacency[e.target].emplace_back(e.source, e.weight);
  }

  auto term = [t](double inner_w, double out_w, double in_w) {
    return inner_w / t - out_w * in_w / (t * t);
  };

  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> links(m + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(links.begin(), links.end(), 0.0);
    for (auto [j, w] : adjacency[i]) links[static_cast<std::size_t>(labels[j])] += w;
    const auto a = static_cast<std::size_t>(labels[i]);
    const double a_inner = inner[a] - links[a] - loop[i];
    const double a_out = out[a] - s.out[i];
    const double a_in = in[a] - s.in[i];
    const double before_a = term(inner[a], out[a], in[a]);
    const double after_a = term(a_inner, a_out, a_in);
    // Targets: every other existing community plus an empty one (index m).
    for (std::size_t b = 0; b <= m; ++b) {
      if (b == a) continue;
      const bool empty = b == m;
      const double b_inner = empty ? 0.0 : inner[b];
      const double b_out = empty ? 0.0 : out[b];
      const double b_in = empty ? 0.0 : in[b];
      const double before_b = term(b_inner, b_out, b_in);
      const double after_b = term(b_inner + links[b] + loop[i], b_out + s.out[i], b_in + s.in[i]);
      best = std::max(best, (after_a + after_b) - (before_a + before_b));
    }
  }
  return best;
}

}  // namespace gnns
