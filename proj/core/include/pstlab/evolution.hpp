#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "pstlab/graph.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab {

/// Piecewise-constant Hamiltonian: an ordered list of (graph, duration)
/// segments played left to right. All graphs must have the same vertex count
/// and durations must be nonnegative.
class EvolutionSchedule {
public:
  struct Segment {
    Graph graph;
    double duration;
  };

  explicit EvolutionSchedule(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  int order() const { return segments_.front().graph.order(); }
  double total_duration() const;

private:
  std::vector<Segment> segments_;
};

/// U(t) = e^{itA} evaluated as V diag(e^{it lambda}) V^T from the
/// eigendecomposition (per-column eigenvalues, no cluster merging). The global
/// phase is kept exactly as e^{itA}. Unitarity is checked to 1e-9.
Eigen::MatrixXcd propagator(const SpectralDecomposition& d, double t);
Eigen::MatrixXcd propagator(const Graph& g, double t);

/// Transfer fidelity p_{j,k}(t) = |<j| e^{itA} |k>|^2. Symmetric in (j, k).
double fidelity(const SpectralDecomposition& d, int j, int k, double t);
double fidelity(const Graph& g, int j, int k, double t);

/// Ordered product e^{i dt_r A_r} ... e^{i dt_1 A_1}: the first segment acts
/// first. Unitary; generally not symmetric once segments differ.
Eigen::MatrixXcd schedule_propagator(const EvolutionSchedule& s);

/// Sampled fidelity curve for one (source, target) pair.
struct FidelityTrace {
  int source = 0;
  int target = 0;
  std::vector<std::pair<double, double>> samples;  // (t, p)
};

/// Samples p_{j,k} at the requested times (strictly increasing), reusing a
/// single eigendecomposition across all samples.
FidelityTrace fidelity_trace(const Graph& g, int j, int k, std::span<const double> times);

}  // namespace pstlab
