#pragma once

#include <Eigen/Dense>

#include <vector>

#include "pstlab/graph.hpp"

namespace pstlab {

/// Full symmetric eigendecomposition with the eigenvalues grouped into
/// distinct values. Raw eigenvalues within cluster_tol * max(1, |lambda|) of
/// each other are merged; the representative is the mean of the merged values.
/// Groups are ordered by descending eigenvalue.
class SpectralDecomposition {
public:
  int order() const { return static_cast<int>(vectors_.rows()); }
  int num_distinct() const { return static_cast<int>(distinct_.size()); }

  const std::vector<double>& distinct_eigenvalues() const { return distinct_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  double eigenvalue(int r) const { return distinct_.at(r); }
  int multiplicity(int r) const { return mult_.at(r); }
  double cluster_tolerance() const { return cluster_tol_; }

  /// Orthonormal eigenvectors, one column per raw eigenvalue, grouped by
  /// distinct value (descending).
  const Eigen::MatrixXd& eigenvectors() const { return vectors_; }
  /// Per-column eigenvalues before merging, same order as eigenvectors().
  const Eigen::VectorXd& raw_eigenvalues() const { return raw_; }

  /// First column index of group r; group r spans [offset, offset + mult).
  int group_offset(int r) const { return offsets_.at(r); }

  /// Orthogonal projector onto the eigenspace of distinct eigenvalue r.
  Eigen::MatrixXd projector(int r) const;
  /// || E_r |u> ||, computed from the group's eigenvector block so the value
  /// is independent of the basis chosen within a degenerate eigenspace.
  double projection_norm(int r, int u) const;

  friend SpectralDecomposition eigendecompose(const Graph& g, double cluster_tol);

private:
  SpectralDecomposition() = default;

  std::vector<double> distinct_;
  std::vector<int> mult_;
  std::vector<int> offsets_;
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd raw_;
  double cluster_tol_ = 0.0;
};

/// Eigendecomposition of the adjacency matrix. Throws std::runtime_error if
/// the eigensolver fails to converge. The reconstruction residual
/// ||A - V diag(raw) V^T||_max is checked against 10 * cluster_tol * max(1, ||A||_max).
SpectralDecomposition eigendecompose(const Graph& g, double cluster_tol = 1e-8);

/// True iff the sorted eigenvalue lists (with multiplicity) agree entrywise
/// within tol * max(1, |lambda|). Requires equal vertex counts.
bool are_cospectral(const Graph& g1, const Graph& g2, double tol = 1e-8);

/// Sylvester construction: the n-fold Kronecker power of [[1,1],[1,-1]].
Eigen::MatrixXd standard_hadamard(int n);

/// True iff H_n^T A H_n / 2^n is diagonal to within
/// tol * max(1, ||A||_max). Requires 2^n vertices. Holds exactly for the
/// cubelike graphs and for no other graphs on 2^n vertices.
bool is_standard_hadamard_diagonalizable(const Graph& g, double tol = 1e-8);

/// Monic minimal polynomial prod_r (x - lambda_r) over the distinct
/// eigenvalues (squarefree, as the adjacency matrix is symmetric).
/// Coefficients are returned in ascending powers, coeffs[s] = 1, and are
/// snapped to the nearest integer when within 1e-6 of one.
std::vector<double> minimal_polynomial(const Graph& g, double cluster_tol = 1e-8);

/// Distinct eigenvalues whose projector does not annihilate vertex u:
/// { lambda_r : ||E_r |u>|| > proj_tol }, descending.
std::vector<double> eigenvalue_support(const Graph& g, int u, double proj_tol = 1e-8);

enum class ObstructionVerdict {
  obstructed,            // u provably belongs to no PST pair
  no_obstruction_found,  // inconclusive; NOT a PST certificate
};

/// Integer/irrational special case of the eigenvalue-ratio obstruction: if
/// the support of u contains two eigenvalues within int_tol of distinct
/// integers and one farther than 100 * int_tol from every integer, vertex u
/// cannot take part in perfect state transfer. Eigenvalues between the two
/// thresholds count for neither side, so the verdict stays conservative.
ObstructionVerdict pst_obstruction_check(const Graph& g, int u, double int_tol = 1e-6);

}  // namespace pstlab
