#include "pstlab/evolution.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pstlab {

namespace {

constexpr double kUnitarityTol = 1e-9;

void check_unitary(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd gram = u * u.adjoint();
  const double err = (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
                         .cwiseAbs()
                         .maxCoeff();
  if (err > kUnitarityTol) {
    throw std::runtime_error("propagator failed the unitarity check, error " +
                             std::to_string(err));
  }
}

}  // namespace

EvolutionSchedule::EvolutionSchedule(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) {
    throw std::invalid_argument("schedule needs at least one segment");
  }
  const int m = segments_.front().graph.order();
  for (const auto& seg : segments_) {
    if (seg.graph.order() != m) {
      throw std::invalid_argument("all schedule segments must have the same vertex count");
    }
    if (!(seg.duration >= 0.0)) {
      throw std::invalid_argument("segment durations must be nonnegative");
    }
  }
}

double EvolutionSchedule::total_duration() const {
  double total = 0.0;
  for (const auto& seg : segments_) total += seg.duration;
  return total;
}

Eigen::MatrixXcd propagator(const SpectralDecomposition& d, double t) {
  const int m = d.order();
  Eigen::VectorXcd phases(m);
  for (int i = 0; i < m; ++i) {
    phases(i) = std::polar(1.0, t * d.raw_eigenvalues()(i));
  }
  Eigen::MatrixXcd u = d.eigenvectors().cast<std::complex<double>>() *
                       phases.asDiagonal() *
                       d.eigenvectors().transpose().cast<std::complex<double>>();
  check_unitary(u);
  return u;
}

Eigen::MatrixXcd propagator(const Graph& g, double t) {
  return propagator(eigendecompose(g), t);
}

double fidelity(const SpectralDecomposition& d, int j, int k, double t) {
  const int m = d.order();
  if (j < 0 || j >= m || k < 0 || k >= m) {
    throw std::out_of_range("vertex index out of range");
  }
  std::complex<double> amp = 0.0;
  for (int i = 0; i < m; ++i) {
    amp += std::polar(d.eigenvectors()(j, i) * d.eigenvectors()(k, i),
                      t * d.raw_eigenvalues()(i));
  }
  return std::norm(amp);
}

double fidelity(const Graph& g, int j, int k, double t) {
  return fidelity(eigendecompose(g), j, k, t);
}

Eigen::MatrixXcd schedule_propagator(const EvolutionSchedule& s) {
  const int m = s.order();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(m, m);
  for (const auto& seg : s.segments()) {
    u = propagator(seg.graph, seg.duration) * u;  // first segment acts first
  }
  check_unitary(u);
  return u;
}

FidelityTrace fidelity_trace(const Graph& g, int j, int k, std::span<const double> times) {
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("trace times must be strictly increasing");
    }
  }
  const SpectralDecomposition d = eigendecompose(g);
  FidelityTrace trace;
  trace.source = j;
  trace.target = k;
  trace.samples.reserve(times.size());
  for (double t : times) {
    trace.samples.emplace_back(t, fidelity(d, j, k, t));
  }
  return trace;
}

}  // namespace pstlab
