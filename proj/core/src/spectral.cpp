#include "pstlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pstlab {

Eigen::MatrixXd SpectralDecomposition::projector(int r) const {
  const int off = group_offset(r);
  const int mult = multiplicity(r);
  const auto block = vectors_.middleCols(off, mult);
  return block * block.transpose();
}

double SpectralDecomposition::projection_norm(int r, int u) const {
  if (u < 0 || u >= order()) {
    throw std::out_of_range("vertex index out of range");
  }
  const int off = group_offset(r);
  const int mult = multiplicity(r);
  return vectors_.row(u).segment(off, mult).norm();
}

SpectralDecomposition eigendecompose(const Graph& g, double cluster_tol) {
  if (!(cluster_tol > 0.0)) {
    throw std::invalid_argument("cluster tolerance must be positive");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigendecomposition failed to converge");
  }

  const int m = g.order();
  SpectralDecomposition d;
  d.cluster_tol_ = cluster_tol;
  d.raw_.resize(m);
  d.vectors_.resize(m, m);
  // descending order
  for (int i = 0; i < m; ++i) {
    d.raw_(i) = solver.eigenvalues()(m - 1 - i);
    d.vectors_.col(i) = solver.eigenvectors().col(m - 1 - i);
  }

  // merge adjacent raw eigenvalues within the relative tolerance
  int start = 0;
  for (int i = 1; i <= m; ++i) {
    const bool close =
        i < m && std::abs(d.raw_(i - 1) - d.raw_(i)) <=
                     cluster_tol * std::max(1.0, std::max(std::abs(d.raw_(i - 1)),
                                                          std::abs(d.raw_(i))));
    if (close) continue;
    const int mult = i - start;
    d.offsets_.push_back(start);
    d.mult_.push_back(mult);
    d.distinct_.push_back(d.raw_.segment(start, mult).mean());
    start = i;
  }

  const double scale = std::max(1.0, g.adjacency().cwiseAbs().maxCoeff());
  const Eigen::MatrixXd reconstructed =
      d.vectors_ * d.raw_.asDiagonal() * d.vectors_.transpose();
  const double residual = (g.adjacency() - reconstructed).cwiseAbs().maxCoeff();
  if (residual > 10.0 * cluster_tol * scale) {
    throw std::runtime_error("eigendecomposition reconstruction residual " +
                             std::to_string(residual) + " exceeds tolerance");
  }
  return d;
}

bool are_cospectral(const Graph& g1, const Graph& g2, double tol) {
  if (g1.order() != g2.order()) {
    throw std::invalid_argument("cospectrality requires equal vertex counts");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s1(g1.adjacency(), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s2(g2.adjacency(), Eigen::EigenvaluesOnly);
  if (s1.info() != Eigen::Success || s2.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigendecomposition failed to converge");
  }
  for (int i = 0; i < g1.order(); ++i) {
    const double a = s1.eigenvalues()(i);
    const double b = s2.eigenvalues()(i);
    if (std::abs(a - b) > tol * std::max(1.0, std::max(std::abs(a), std::abs(b)))) {
      return false;
    }
  }
  return true;
}

Eigen::MatrixXd standard_hadamard(int n) {
  if (n < 1) {
    throw std::invalid_argument("Hadamard order must be >= 1");
  }
  const std::size_t m = std::size_t{1} << n;
  if (m > vertex_cap()) {
    throw std::invalid_argument("Hadamard matrix exceeds the vertex cap");
  }
  Eigen::MatrixXd h(1, 1);
  h(0, 0) = 1.0;
  for (int step = 0; step < n; ++step) {
    const Eigen::Index s = h.rows();
    Eigen::MatrixXd next(2 * s, 2 * s);
    next.topLeftCorner(s, s) = h;
    next.topRightCorner(s, s) = h;
    next.bottomLeftCorner(s, s) = h;
    next.bottomRightCorner(s, s) = -h;
    h = std::move(next);
  }
  return h;
}

bool is_standard_hadamard_diagonalizable(const Graph& g, double tol) {
  const int m = g.order();
  if (m < 2 || (m & (m - 1)) != 0) {
    throw std::invalid_argument("vertex count must be a power of two (>= 2)");
  }
  const int n = std::countr_zero(static_cast<unsigned>(m));
  const Eigen::MatrixXd h = standard_hadamard(n);
  Eigen::MatrixXd conj = h.transpose() * g.adjacency() * h / static_cast<double>(m);
  conj.diagonal().setZero();
  const double scale = std::max(1.0, g.adjacency().cwiseAbs().maxCoeff());
  return conj.cwiseAbs().maxCoeff() <= tol * scale;
}

std::vector<double> minimal_polynomial(const Graph& g, double cluster_tol) {
  const SpectralDecomposition d = eigendecompose(g, cluster_tol);
  // expand prod_r (x - lambda_r), ascending powers
  std::vector<double> coeff{1.0};
  for (double lambda : d.distinct_eigenvalues()) {
    std::vector<double> next(coeff.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] += coeff[i];
      next[i] -= lambda * coeff[i];
    }
    coeff = std::move(next);
  }
  for (double& c : coeff) {
    const double rounded = std::round(c);
    if (std::abs(c - rounded) <= 1e-6) c = rounded;
  }
  return coeff;
}

std::vector<double> eigenvalue_support(const Graph& g, int u, double proj_tol) {
  if (u < 0 || u >= g.order()) {
    throw std::out_of_range("vertex index out of range");
  }
  const SpectralDecomposition d = eigendecompose(g);
  std::vector<double> support;
  for (int r = 0; r < d.num_distinct(); ++r) {
    if (d.projection_norm(r, u) > proj_tol) {
      support.push_back(d.eigenvalue(r));
    }
  }
  return support;
}

ObstructionVerdict pst_obstruction_check(const Graph& g, int u, double int_tol) {
  if (!(int_tol > 0.0)) {
    throw std::invalid_argument("integer tolerance must be positive");
  }
  const std::vector<double> support = eigenvalue_support(g, u);
  std::set<long long> integers;
  int non_integers = 0;
  for (double lambda : support) {
    const double dist = std::abs(lambda - std::round(lambda));
    if (dist <= int_tol) {
      integers.insert(static_cast<long long>(std::llround(lambda)));
    } else if (dist > 100.0 * int_tol) {
      ++non_integers;
    }
    // values between the thresholds are classified as neither
  }
  if (integers.size() >= 2 && non_integers >= 1) {
    return ObstructionVerdict::obstructed;
  }
  return ObstructionVerdict::no_obstruction_found;
}

}  // namespace pstlab
