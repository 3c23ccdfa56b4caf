#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gnns/graph.hpp"

namespace gnns {

using DenseMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Soft community memberships: an n x m matrix whose rows are probability
/// vectors.
class AttachmentMatrix {
 public:
  AttachmentMatrix() = default;
  /// Takes the values as given; use is_row_stochastic() to validate.
  explicit AttachmentMatrix(DenseMatrix values) : values_(std::move(values)) {}

  /// Binary attachment with row i = e_{labels[i]}. Throws DataError if a label
  /// is outside [0, communities).
  static AttachmentMatrix from_labels(std::span<const int> labels, std::size_t communities);

  std::size_t nodes() const noexcept { return static_cast<std::size_t>(values_.rows()); }
  std::size_t communities() const noexcept { return static_cast<std::size_t>(values_.cols()); }

  const DenseMatrix& values() const noexcept { return values_; }
  DenseMatrix& values() noexcept { return values_; }

  double operator()(std::size_t i, std::size_t p) const {
    return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p));
  }

  /// Rows sum to one within `tolerance` and entries lie in [0, 1].
  bool is_row_stochastic(double tolerance = 1e-9) const;

  /// Per-row argmax, ties resolved to the lowest column.
  std::vector<int> argmax_labels() const;

 private:
  DenseMatrix values_;
};

/// Dense matrix of edge scores q(i, j) = e(i, j)/T - w_out(i) w_in(j)/T^2.
class ModularityMatrix {
 public:
  /// Wraps precomputed scores; `removed_diagonal` is the sum of the diagonal
  /// entries that were zeroed (0 when the diagonal is intact).
  static ModularityMatrix from_scores(DenseMatrix q, bool diagonal_zeroed,
                                      double removed_diagonal = 0.0);

  std::size_t size() const noexcept { return static_cast<std::size_t>(q_.rows()); }
  const DenseMatrix& scores() const noexcept { return q_; }
  double operator()(std::size_t i, std::size_t j) const {
    return q_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  bool diagonal_zeroed() const noexcept { return diagonal_zeroed_; }
  /// Sum of the original diagonal entries that were set to zero. Adding it to
  /// a score computed on the zeroed matrix gives the standard modularity.
  double removed_diagonal() const noexcept { return removed_diagonal_; }
  bool symmetric() const noexcept { return symmetric_; }

  /// Copy with q(i, i) := 0.
  ModularityMatrix with_zero_diagonal() const;

 private:
  DenseMatrix q_;
  bool diagonal_zeroed_ = false;
  double removed_diagonal_ = 0.0;
  bool symmetric_ = true;
};

ModularityMatrix modularity_matrix(const Graph& g, bool zero_diagonal);

/// Hard community labeling with compact labels in [0, communities).
struct Partition {
  std::vector<int> labels;
  int communities = 0;
  double score = 0.0;
};

/// Renumbers labels to [0, m) in order of first appearance; returns m.
int compact_labels(std::vector<int>& labels);

/// Standard modularity (diagonal terms included) of a labeling. On a
/// zero-diagonal matrix the removed diagonal is added back, so the value is
/// the same for both variants. Throws DataError on a size mismatch or a
/// label outside [0, n).
double partition_modularity(const ModularityMatrix& mm, std::span<const int> labels);

/// Same quantity computed from the sparse edge list in O(|E| + n).
double partition_modularity(const Graph& g, std::span<const int> labels);

/// tr(C^T Q C) against the matrix exactly as stored.
double soft_modularity(const ModularityMatrix& mm, const AttachmentMatrix& c);

/// Rounds a soft attachment to a hard partition without decreasing
/// tr(C^T Q C) on the zero-diagonal matrix.
///
/// Nodes are visited in index order; each row is replaced by the unit vector
/// of the community with the largest linear gain given all other rows as they
/// currently are (its own argmax column is kept on ties, otherwise the lowest
/// index wins). Single-node improvement sweeps then run until no move raises
/// the score. The returned score is the standard modularity.
Partition binarize(const AttachmentMatrix& c, const ModularityMatrix& mm);

/// Largest modularity gain available from moving one node to another existing
/// community or to a new singleton. Non-positive means the labeling is a
/// local optimum under single-node moves.
double best_single_move_gain(const Graph& g, std::span<const int> labels);

}  // namespace gnns
