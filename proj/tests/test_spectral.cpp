#include <doctest.h>

#include <algorithm>
#include <random>

#include "pstlab/spectral.hpp"
#include "pstlab/switching.hpp"
#include "support/oracles.hpp"

using namespace pstlab;

namespace {

Graph a53() { return build_block_cube(BlockSpec(5, {1.0, 0.0})); }

bool contains_approx(const std::vector<double>& values, double x, double tol = 1e-8) {
  return std::any_of(values.begin(), values.end(),
                     [&](double v) { return std::abs(v - x) <= tol; });
}

}  // namespace

TEST_CASE("K_2 eigendecomposition") {
  const SpectralDecomposition d = eigendecompose(hypercube(1));
  REQUIRE(d.num_distinct() == 2);
  CHECK(d.eigenvalue(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.eigenvalue(1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(d.multiplicities() == std::vector<int>{1, 1});
}

TEST_CASE("decomposition groups satisfy the projector algebra") {
  const SpectralDecomposition d = eigendecompose(hypercube(4));
  const int m = d.order();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(m, m);
  for (int r = 0; r < d.num_distinct(); ++r) {
    const Eigen::MatrixXd e = d.projector(r);
    CHECK((e * e - e).cwiseAbs().maxCoeff() <= 1e-10);
    for (int t = r + 1; t < d.num_distinct(); ++t) {
      CHECK((e * d.projector(t)).cwiseAbs().maxCoeff() <= 1e-10);
    }
    sum += e;
    recon += d.eigenvalue(r) * e;
  }
  CHECK((sum - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((recon - hypercube(4).adjacency()).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("eigenvalue clustering merges near-duplicates") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  a(0, 1) = a(1, 0) = 1.0;
  a(2, 3) = a(3, 2) = 1.0 + 1e-13;
  const Graph g(a);
  const SpectralDecomposition merged = eigendecompose(g);  // tol 1e-8
  CHECK(merged.num_distinct() == 2);
  CHECK(merged.multiplicities() == std::vector<int>{2, 2});
  const SpectralDecomposition split = eigendecompose(g, 1e-15);
  CHECK(split.num_distinct() == 4);
}

TEST_CASE("cluster tolerance must be positive") {
  CHECK_THROWS_AS(eigendecompose(hypercube(1), 0.0), std::invalid_argument);
}

TEST_CASE("block cube [1,0]: frozen spectrum") {
  const SpectralDecomposition d = eigendecompose(a53());
  const std::vector<double> expected = {
      5.0, 3.0, 2.70927535943692, 1.90321192591155, 1.0, 0.193936566474630,
      -0.193936566474630, -1.0, -1.90321192591155, -2.70927535943692, -3.0, -5.0};
  const std::vector<int> expected_mult = {1, 2, 3, 3, 4, 3, 3, 4, 3, 3, 2, 1};
  REQUIRE(d.num_distinct() == 12);
  for (int r = 0; r < 12; ++r) {
    CHECK(d.eigenvalue(r) ==
          doctest::Approx(expected[static_cast<std::size_t>(r)]).epsilon(1e-10));
    CHECK(d.multiplicity(r) == expected_mult[static_cast<std::size_t>(r)]);
  }
}

TEST_CASE("block cube [1,0]: eigenvectors for the integer eigenvalues") {
  const Graph g = a53();
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(32);
  CHECK((g.adjacency() * ones - 5.0 * ones).cwiseAbs().maxCoeff() <= 1e-12);

  Eigen::VectorXd split(32);
  split.head(16).setOnes();
  split.tail(16).setConstant(-1.0);
  CHECK((g.adjacency() * split - 3.0 * split).cwiseAbs().maxCoeff() <= 1e-12);

  // eigenvalue 5 is simple and its projector keeps the all-ones direction
  const SpectralDecomposition d = eigendecompose(g);
  CHECK(d.eigenvalue(0) == doctest::Approx(5.0));
  CHECK(d.multiplicity(0) == 1);
  CHECK((d.projector(0) * ones - ones).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("the six non-integer eigenvalues solve the frozen sextic") {
  const SpectralDecomposition d = eigendecompose(a53());
  int irrational = 0;
  for (double lambda : d.distinct_eigenvalues()) {
    if (std::abs(lambda - std::round(lambda)) <= 1e-6) continue;
    ++irrational;
    const double l2 = lambda * lambda;
    const double residual = -l2 * l2 * l2 + 11.0 * l2 * l2 - 27.0 * l2 + 1.0;
    CHECK(std::abs(residual) <= 1e-8);
  }
  CHECK(irrational == 6);
}

TEST_CASE("are_cospectral basics") {
  const Graph g = hypercube(4);
  CHECK(are_cospectral(g, g));
  CHECK(are_cospectral(g, switched_hypercube(4)));
  CHECK_FALSE(are_cospectral(g, cubelike(ConnectionSet(4, {1, 2, 3, 4}))));
  CHECK_THROWS_AS(are_cospectral(g, hypercube(3)), std::invalid_argument);
}

TEST_CASE("standard Hadamard matrices") {
  Eigen::MatrixXd h1(2, 2);
  h1 << 1, 1, 1, -1;
  CHECK(standard_hadamard(1) == h1);

  const Eigen::MatrixXd h2 = standard_hadamard(2);
  Eigen::RowVectorXd row2(4);
  row2 << 1, 1, -1, -1;
  CHECK(h2.row(2) == row2);

  for (int n = 1; n <= 6; ++n) {
    const Eigen::MatrixXd h = standard_hadamard(n);
    const double scale = static_cast<double>(1 << n);
    CHECK((h.transpose() * h - scale * Eigen::MatrixXd::Identity(h.rows(), h.rows()))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(standard_hadamard(0), std::invalid_argument);
}

TEST_CASE("hypercubes are standard-Hadamard diagonalizable") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(is_standard_hadamard_diagonalizable(hypercube(n)));
  }
}

TEST_CASE("random connected cubelike graphs are standard-Hadamard diagonalizable "
          "with character-sum spectra") {
  std::mt19937 rng(99);
  for (int n = 2; n <= 5; ++n) {
    int found = 0;
    while (found < 50) {
      std::vector<std::uint32_t> pool;
      for (std::uint32_t e = 1; e < (1u << n); ++e) pool.push_back(e);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::uniform_int_distribution<int> size_dist(n, (1 << n) - 1);
      pool.resize(static_cast<std::size_t>(size_dist(rng)));
      if (testing::gf2_rank(pool) != n) continue;
      ++found;
      const Graph g = cubelike(ConnectionSet(n, pool));
      REQUIRE(is_connected(g));
      CHECK(is_standard_hadamard_diagonalizable(g));

      // independent oracle: eigenvalues are the character sums
      const std::vector<double> expected = testing::cubelike_character_spectrum(n, pool);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency(),
                                                            Eigen::EigenvaluesOnly);
      for (int i = 0; i < g.order(); ++i) {
        REQUIRE(solver.eigenvalues()(i) ==
                doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("a connected proper subgraph of Q_4 is not Hadamard diagonalizable") {
  Eigen::MatrixXd a = hypercube(4).adjacency();
  a(0, 1) = a(1, 0) = 0.0;  // drop one edge; the rest of Q_4 stays connected
  const Graph g(a);
  REQUIRE(is_connected(g));
  CHECK_FALSE(is_standard_hadamard_diagonalizable(g));
}

TEST_CASE("Hadamard diagonalizability needs a power-of-two vertex count") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 1) = a(1, 0) = 1.0;
  CHECK_THROWS_AS(is_standard_hadamard_diagonalizable(Graph(a)), std::invalid_argument);
}

TEST_CASE("minimal polynomial of the 4-cube variants") {
  const std::vector<double> expected = {0, 64, 0, -20, 0, 1};  // ascending powers
  CHECK(minimal_polynomial(hypercube(4)) == expected);
  CHECK(minimal_polynomial(switched_hypercube(4)) == expected);
  CHECK(minimal_polynomial(hypercube(1)) == std::vector<double>{-1, 0, 1});
}

TEST_CASE("eigenvalue support") {
  const Graph g = a53();
  SUBCASE("five and three are in the support of every vertex") {
    for (int u = 0; u < 32; ++u) {
      const std::vector<double> sup = eigenvalue_support(g, u);
      CHECK(contains_approx(sup, 5.0));
      CHECK(contains_approx(sup, 3.0));
    }
  }
  SUBCASE("vertices outside the protected set see an eigenvalue in [2.7, 2.8]") {
    for (int u = 0; u < 32; ++u) {
      const bool is_protected = (u % 16 == 0) || (u % 16 == 15);
      const std::vector<double> sup = eigenvalue_support(g, u);
      const bool has_irrational =
          std::any_of(sup.begin(), sup.end(), [](double v) { return v >= 2.7 && v <= 2.8; });
      CHECK(has_irrational == !is_protected);
    }
  }
  SUBCASE("protected vertices keep an all-integer support") {
    for (int u : {0, 15, 16, 31}) {
      const std::vector<double> sup = eigenvalue_support(g, u);
      CHECK(sup.size() == 6);
      for (double v : sup) {
        CHECK(std::abs(v - std::round(v)) <= 1e-8);
      }
    }
  }
  SUBCASE("K_2 vertex 0 supports both eigenvalues") {
    const std::vector<double> sup = eigenvalue_support(hypercube(1), 0);
    REQUIRE(sup.size() == 2);
    CHECK(sup[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sup[1] == doctest::Approx(-1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(eigenvalue_support(g, 32), std::out_of_range);
}

TEST_CASE("obstruction verdicts") {
  const Graph g = a53();
  CHECK(pst_obstruction_check(g, 1) == ObstructionVerdict::obstructed);
  CHECK(pst_obstruction_check(g, 0) == ObstructionVerdict::no_obstruction_found);
  CHECK(pst_obstruction_check(g, 15) == ObstructionVerdict::no_obstruction_found);
  for (int u = 0; u < 8; ++u) {
    CHECK(pst_obstruction_check(hypercube(3), u) ==
          ObstructionVerdict::no_obstruction_found);
  }
}
