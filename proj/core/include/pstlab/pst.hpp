#pragma once

#include <Eigen/Dense>

#include <map>
#include <utility>
#include <vector>

#include "pstlab/evolution.hpp"
#include "pstlab/graph.hpp"

namespace pstlab {

struct PstPair {
  int j;
  int k;  // j < k
  double fidelity;
};

/// Pairs (j, k) whose transfer fidelity reaches 1 - tolerance at the given
/// time, plus the vertices left unpaired. Pairs are disjoint and sorted by j.
struct PstReport {
  double time = 0.0;
  double tolerance = 0.0;
  std::vector<PstPair> pairs;
  std::vector<int> unpaired;
};

/// Scans all vertex pairs of the propagator at time t. Tolerance must be in
/// (0, 1/2) so partners are unique; a non-disjoint pairing (possible only for
/// non-symmetric schedule propagators) throws.
PstReport find_pst_pairs(const Graph& g, double t, double tol = 1e-6);
PstReport find_pst_pairs(const EvolutionSchedule& s, double tol = 1e-6);
/// Core scan over an explicit unitary; both (j,k) and (k,j) entries are
/// examined and the unordered pair gets the larger of the two fidelities.
PstReport find_pst_pairs_in(const Eigen::MatrixXcd& u, double t_label, double tol);

/// Vertices whose low 4 bits are 0000 or 1111 (local index 0 or 15 inside
/// each 16-vertex block). These keep the full hypercube fidelity dynamics
/// under every switching/blending variant. |S| = 2^(n-3). Requires n >= 4.
std::vector<int> protected_set(int n);

/// The complement pairs (v, 2^n - 1 - v) for v in the protected set with low
/// bits 0000; each pair stays inside the protected set. Requires n >= 4.
std::vector<std::pair<int, int>> expected_s_pairs(int n);

/// k-th derivative of the transfer fidelity into vertex s at a PST time,
/// evaluated from the Hamiltonian moments <s|A^l|s>:
///   odd k  -> exactly 0
///   even k -> (-1)^((k mod 4)/2) * sum_l (-1)^l C(k,l) <s|A^l|s><s|A^(k-l)|s>
/// The PST precondition is validated (max_j p_{j,s}(t0) >= 1 - 1e-6) and a
/// failure throws; the formula is only meaningful at PST times.
double fidelity_derivative_analytic(const Graph& g, int s, double t0, int order);
/// Schedule variant: readout-time sensitivity, i.e. the derivative with
/// respect to the final segment's duration. Uses the final segment's
/// Hamiltonian; validates PST into s at the schedule end.
double fidelity_derivative_analytic(const EvolutionSchedule& s, int vertex, int order);

/// Central finite difference of p_{j,k} around t0 (order 1 or 2).
double fidelity_derivative_numeric(const Graph& g, int j, int k, double t0, int order,
                                   double h = 1e-3);
/// Schedule variant: perturbs only the final segment's duration.
double fidelity_derivative_numeric(const EvolutionSchedule& s, int j, int k, int order,
                                   double h = 1e-3);

struct DerivativeReport {
  int j = 0;
  int k = 0;
  double t0 = 0.0;
  std::map<int, double> values;  // order -> d^k p / dt^k at t0
};

enum class CensusFamily { hypercube, switched, partial_all, blend };

struct CensusInstance {
  std::vector<double> blocks;  // empty for plain hypercubes below order 16
  int pair_count = 0;
  std::vector<int> paired_vertices;
  bool proper_partial = false;        // blocks all 0/1, at least one of each
  bool matches_protected_set = false; // paired set == protected_set(n)
};

struct CensusReport {
  CensusFamily family;
  int n = 0;
  double time = 0.0;
  double tolerance = 0.0;
  std::vector<CensusInstance> instances;
  /// Indices of proper partial instances whose PST vertex set is not exactly
  /// the protected set. Reported, never asserted.
  std::vector<int> flagged_instances;
};

/// PST pair counts at time pi/2 across a graph family. partial_all enumerates
/// all 2^(2^(n-4)) block patterns (n <= 6); blend runs the single instance
/// described by blend_blocks.
CensusReport pst_census(CensusFamily family, int n,
                        const std::vector<double>& blend_blocks = {},
                        double tol = 1e-6);

}  // namespace pstlab
