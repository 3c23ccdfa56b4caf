#include <cmath>
#include <random>

#include "doctest.h"
#include "gnns/errors.hpp"
#include "gnns/metrics.hpp"
#include "gnns/modularity.hpp"
#include "oracles.hpp"
#include "paths.hpp"

using namespace gnns;

namespace {

// Best 4-community split of the karate club, scored 0.41978961209730437 by
// networkx.
const std::vector<int> kKarateBest{0, 0, 0, 0, 1, 1, 1, 0, 2, 2, 1, 0, 0, 0, 2, 2, 1,
                                   0, 2, 0, 2, 0, 2, 3, 3, 3, 2, 3, 3, 2, 2, 3, 2, 2};
constexpr double kKarateBestScore = 0.41978961209730437;

AttachmentMatrix random_attachment(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  DenseMatrix c(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index p = 0; p < c.cols(); ++p) c(i, p) = u(rng);
    c.row(i) /= c.row(i).sum();
  }
  return AttachmentMatrix(c);
}

oracle::Matrix to_rows(const DenseMatrix& c) {
  oracle::Matrix rows(static_cast<std::size_t>(c.rows()));
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index p = 0; p < c.cols(); ++p) rows[static_cast<std::size_t>(i)].push_back(c(i, p));
  }
  return rows;
}

double total(const ModularityMatrix& mm) { return mm.scores().sum(); }

}  // namespace

TEST_CASE("edge scores of a single edge") {
  const std::vector<Edge> edge{{0, 1, 1}};
  Graph g = Graph::from_edges(2, edge, Directedness::kUndirected);
  ModularityMatrix full = modularity_matrix(g, false);
  CHECK(full(0, 1) == doctest::Approx(0.25));
  CHECK(full(1, 0) == doctest::Approx(0.25));
  CHECK(full(0, 0) == doctest::Approx(-0.25));
  CHECK(full(1, 1) == doctest::Approx(-0.25));
  CHECK_FALSE(full.diagonal_zeroed());

  ModularityMatrix zeroed = modularity_matrix(g, true);
  CHECK(zeroed.diagonal_zeroed());
  CHECK(zeroed(0, 0) == 0.0);
  CHECK(zeroed(1, 1) == 0.0);
  CHECK(zeroed.removed_diagonal() == doctest::Approx(-0.5));
}

TEST_CASE("edge scores match the direct formula and sum to zero") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const bool directed = trial % 3 == 0;
    Graph g = oracle::random_graph(2 + trial % 29, 0.25, rng, trial % 2 == 0, directed);
    ModularityMatrix mm = modularity_matrix(g, false);
    oracle::Matrix q = oracle::edge_scores(g);
    double worst = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) worst = std::max(worst, std::abs(mm(i, j) - q[i][j]));
    }
    CHECK(worst <= 1e-15);
    CHECK(std::abs(total(mm)) <= 1e-9);
    ModularityMatrix z = modularity_matrix(g, true);
    CHECK(std::abs(total(z) + z.removed_diagonal()) <= 1e-9);
    if (!directed) CHECK(mm.symmetric());
  }
}

TEST_CASE("edge scores are scale free") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = oracle::random_graph(12, 0.3, rng, true, trial % 2 == 1);
    ModularityMatrix base = modularity_matrix(g, false);
    for (double lambda : {0.5, 3.0, 7.0, 100.0}) {
      ModularityMatrix scaled = modularity_matrix(g.scaled(lambda), false);
      CHECK((scaled.scores() - base.scores()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("one community scores zero") {
  Graph g = load_graph(testing_paths::data("karate.txt"), GraphFormat::kEdgeList);
  std::vector<int> one(g.node_count(), 0);
  CHECK(std::abs(partition_modularity(modularity_matrix(g, false), one)) <= 1e-12);
  CHECK(std::abs(partition_modularity(g, one)) <= 1e-12);
}

TEST_CASE("dumbbell split") {
  Graph g = oracle::dumbbell();
  const std::vector<int> halves{0, 0, 0, 1, 1, 1};
  CHECK(partition_modularity(modularity_matrix(g, false), halves) == doctest::Approx(5.0 / 14.0));
  CHECK(partition_modularity(modularity_matrix(g, true), halves) == doctest::Approx(5.0 / 14.0));
  CHECK(partition_modularity(g, halves) == doctest::Approx(5.0 / 14.0));
  CHECK(oracle::best_labeling_score(oracle::edge_scores(g)) == doctest::Approx(5.0 / 14.0));
}

TEST_CASE("karate best split") {
  Graph g = load_graph(testing_paths::data("karate.txt"), GraphFormat::kEdgeList);
  const double dense = partition_modularity(modularity_matrix(g, false), kKarateBest);
  CHECK(dense == doctest::Approx(kKarateBestScore).epsilon(1e-12));
  CHECK(std::abs(dense - 0.419790) <= 1e-6);
  CHECK(partition_modularity(g, kKarateBest) == doctest::Approx(kKarateBestScore).epsilon(1e-12));
}

TEST_CASE("dense, sparse and direct scoring agree") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 29;
    Graph g = oracle::random_graph(n, 0.3, rng, true, trial % 4 == 0);
    std::vector<Edge> arcs(g.arcs().begin(), g.arcs().end());
    arcs.push_back({0, 0, 1.0});  // exercise the diagonal
    g = Graph::from_edges(n, arcs, g.directed() ? Directedness::kDirected : Directedness::kUndirected);
    std::uniform_int_distribution<int> label(0, static_cast<int>(std::min<std::size_t>(n, 4)) - 1);
    std::vector<int> labels(n);
    for (int& l : labels) l = label(rng);

    const double expect = oracle::labeling_score(oracle::edge_scores(g), labels);
    const ModularityMatrix full = modularity_matrix(g, false);
    CHECK(std::abs(partition_modularity(full, labels) - expect) <= 1e-12);
    CHECK(std::abs(partition_modularity(modularity_matrix(g, true), labels) - expect) <= 1e-12);
    CHECK(std::abs(partition_modularity(g, labels) - expect) <= 1e-12);
    CHECK(std::abs(soft_modularity(full, AttachmentMatrix::from_labels(labels, 4)) - expect) <= 1e-9);
  }
}

TEST_CASE("soft score matches the double-loop oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(10, 0.35, rng, true, trial % 2 == 0);
    ModularityMatrix mm = modularity_matrix(g, false);
    AttachmentMatrix c = random_attachment(10, 4, rng);
    CHECK(std::abs(soft_modularity(mm, c) - oracle::soft_score(oracle::edge_scores(g), to_rows(c.values()))) <= 1e-9);
  }
}

TEST_CASE("uniform attachment scores zero") {
  Graph g = load_graph(testing_paths::data("lesmis.txt"), GraphFormat::kEdgeList);
  ModularityMatrix mm = modularity_matrix(g, false);
  for (std::size_t m : {2u, 5u, 32u}) {
    DenseMatrix c = DenseMatrix::Constant(static_cast<Eigen::Index>(g.node_count()),
                                          static_cast<Eigen::Index>(m), 1.0 / double(m));
    CHECK(std::abs(soft_modularity(mm, AttachmentMatrix(c))) <= 1e-12);
  }
}

TEST_CASE("scoring errors") {
  ModularityMatrix mm = modularity_matrix(oracle::dumbbell(), false);
  const std::vector<int> short_labels{0, 0, 0};
  CHECK_THROWS_AS(partition_modularity(mm, short_labels), DataError);
  const std::vector<int> negative{0, 0, 0, 1, 1, -1};
  CHECK_THROWS_AS(partition_modularity(mm, negative), DataError);
  CHECK_THROWS_AS(partition_modularity(oracle::dumbbell(), negative), DataError);
  CHECK_THROWS_AS(soft_modularity(mm, AttachmentMatrix(DenseMatrix::Constant(4, 2, 0.5))), DataError);
  CHECK_THROWS_AS(AttachmentMatrix::from_labels(negative, 2), DataError);
  const std::vector<int> three{0, 1, 2};
  CHECK_THROWS_AS(AttachmentMatrix::from_labels(three, 2), DataError);
}

TEST_CASE("compact labels") {
  std::vector<int> labels{5, 5, 2, 9, 2};
  CHECK(compact_labels(labels) == 3);
  CHECK(labels == std::vector<int>{0, 0, 1, 2, 1});
}

TEST_CASE("argmax picks the lowest column on ties") {
  DenseMatrix c(3, 3);
  c << 0.4, 0.4, 0.2,
       0.1, 0.3, 0.6,
       1.0 / 3, 1.0 / 3, 1.0 / 3;
  CHECK(AttachmentMatrix(c).argmax_labels() == std::vector<int>{0, 2, 0});
}

TEST_CASE("row stochastic check") {
  CHECK(AttachmentMatrix(DenseMatrix::Constant(3, 4, 0.25)).is_row_stochastic());
  DenseMatrix bad = DenseMatrix::Constant(3, 2, 0.5);
  bad(1, 0) = 0.6;
  CHECK_FALSE(AttachmentMatrix(bad).is_row_stochastic());
  bad(1, 0) = 1.5;
  bad(1, 1) = -0.5;
  CHECK_FALSE(AttachmentMatrix(bad).is_row_stochastic());
}

TEST_CASE("binarize keeps a consistent binary attachment") {
  Graph g = oracle::dumbbell();
  const std::vector<int> halves{0, 0, 0, 1, 1, 1};
  Partition p = binarize(AttachmentMatrix::from_labels(halves, 2), modularity_matrix(g, true));
  CHECK(p.labels == halves);
  CHECK(p.communities == 2);
  CHECK(p.score == doctest::Approx(5.0 / 14.0));
}

TEST_CASE("binarize resolves a uniform start on the dumbbell") {
  Graph g = oracle::dumbbell();
  Partition p = binarize(AttachmentMatrix(DenseMatrix::Constant(6, 2, 0.5)), modularity_matrix(g, true));
  CHECK(p.score == doctest::Approx(5.0 / 14.0));
  CHECK(p.labels == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("binarize never lowers the soft score") {
  std::mt19937_64 rng(37);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 19;
    Graph g = oracle::random_graph(n, 0.3, rng, true, trial % 3 == 0);
    ModularityMatrix zq = modularity_matrix(g, true);
    AttachmentMatrix c = random_attachment(n, 2 + trial % 5, rng);
    const double before = soft_modularity(zq, c);
    Partition p = binarize(c, zq);
    const double after = p.score - zq.removed_diagonal();
    if (after < before - 1e-12) ++violations;
    CHECK(p.score == doctest::Approx(partition_modularity(g, p.labels)).epsilon(1e-12));
    CHECK(best_single_move_gain(g, p.labels) <= 1e-12);
  }
  CHECK(violations == 0);
}

TEST_CASE("zeroing the diagonal does not change the optimal partition") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 6;
    Graph g = oracle::random_graph(n, 0.45, rng);
    ModularityMatrix full = modularity_matrix(g, false);
    ModularityMatrix zeroed = modularity_matrix(g, true);
    // Enumerate n^n labelings under both matrices; the best labeling found
    // with the zeroed scores must also be best under the full ones.
    std::vector<int> labels(n, 0), best_zero;
    double best_z = -1e300, best_f = -1e300;
    while (true) {
      double sz = 0, sf = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (labels[i] != labels[j]) continue;
          sz += zeroed(i, j);
          sf += full(i, j);
        }
      }
      if (sz > best_z + 1e-12) {
        best_z = sz;
        best_zero = labels;
      }
      best_f = std::max(best_f, sf);
      std::size_t k = 0;
      while (k < n && labels[k] == static_cast<int>(n) - 1) labels[k++] = 0;
      if (k == n) break;
      ++labels[k];
    }
    CHECK(partition_modularity(full, best_zero) == doctest::Approx(best_f).epsilon(1e-12));
  }
}

TEST_CASE("single-move gain on the dumbbell") {
  Graph g = oracle::dumbbell();
  CHECK(best_single_move_gain(g, std::vector<int>{0, 0, 0, 1, 1, 1}) <= 0.0);
  CHECK(best_single_move_gain(g, std::vector<int>{0, 0, 1, 1, 1, 1}) > 0.0);
  // Splitting any node off the single community lowers the score.
  CHECK(best_single_move_gain(g, std::vector<int>{0, 0, 0, 0, 0, 0}) <= 0.0);
}
