#include "pstlab/pst.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pstlab/switching.hpp"

namespace pstlab {

namespace {

std::vector<double> vertex_moments(const Eigen::MatrixXd& a, int s, int max_power) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(a.rows());
  w(s) = 1.0;
  std::vector<double> moments(static_cast<std::size_t>(max_power) + 1);
  moments[0] = 1.0;
  for (int l = 1; l <= max_power; ++l) {
    w = a * w;
    moments[static_cast<std::size_t>(l)] = w(s);
  }
  return moments;
}

double derivative_from_moments(const std::vector<double>& moments, int order) {
  if (order % 2 == 1) return 0.0;
  // sign (-1)^((k mod 4)/2): +1 for k = 0 mod 4, -1 for k = 2 mod 4
  const double sign = (order % 4 == 0) ? 1.0 : -1.0;
  double binom = 1.0;
  double sum = 0.0;
  for (int l = 0; l <= order; ++l) {
    const double term = binom * moments[static_cast<std::size_t>(l)] *
                        moments[static_cast<std::size_t>(order - l)];
    sum += (l % 2 == 0) ? term : -term;
    binom = binom * (order - l) / (l + 1);
  }
  return sign * sum;
}

void check_pst_into(const Eigen::MatrixXcd& u, int s) {
  const int m = static_cast<int>(u.rows());
  if (s < 0 || s >= m) {
    throw std::out_of_range("vertex index out of range");
  }
  double best = 0.0;
  for (int j = 0; j < m; ++j) {
    if (j == s) continue;
    best = std::max(best, std::max(std::norm(u(j, s)), std::norm(u(s, j))));
  }
  if (best < 1.0 - 1e-6) {
    throw std::invalid_argument(
        "no perfect state transfer into vertex " + std::to_string(s) +
        " at the requested time (best fidelity " + std::to_string(best) + ")");
  }
}

int check_order(int order) {
  if (order < 1) {
    throw std::invalid_argument("derivative order must be >= 1");
  }
  return order;
}

}  // namespace

PstReport find_pst_pairs_in(const Eigen::MatrixXcd& u, double t_label, double tol) {
  if (!(tol > 0.0 && tol < 0.5)) {
    throw std::invalid_argument("PST tolerance must lie in (0, 1/2)");
  }
  const int m = static_cast<int>(u.rows());
  PstReport report;
  report.time = t_label;
  report.tolerance = tol;
  std::vector<int> partner(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const double f = std::max(std::norm(u(j, k)), std::norm(u(k, j)));
      if (f < 1.0 - tol) continue;
      if (partner[j] != -1 || partner[k] != -1) {
        throw std::runtime_error("PST pairing is not disjoint at this tolerance");
      }
      partner[j] = k;
      partner[k] = j;
      report.pairs.push_back({j, k, f});
    }
  }
  for (int v = 0; v < m; ++v) {
    if (partner[v] == -1) report.unpaired.push_back(v);
  }
  return report;
}

PstReport find_pst_pairs(const Graph& g, double t, double tol) {
  return find_pst_pairs_in(propagator(g, t), t, tol);
}

PstReport find_pst_pairs(const EvolutionSchedule& s, double tol) {
  return find_pst_pairs_in(schedule_propagator(s), s.total_duration(), tol);
}

std::vector<int> protected_set(int n) {
  if (n < 4) {
    throw std::invalid_argument("protected set requires n >= 4");
  }
  if (n >= 31 || (std::size_t{1} << n) > vertex_cap()) {
    throw std::invalid_argument("protected set exceeds the vertex cap");
  }
  std::vector<int> s;
  const int m = 1 << n;
  for (int v = 0; v < m; ++v) {
    const int low = v & 15;
    if (low == 0 || low == 15) s.push_back(v);
  }
  return s;
}

std::vector<std::pair<int, int>> expected_s_pairs(int n) {
  if (n < 4) {
    throw std::invalid_argument("expected S pairs require n >= 4");
  }
  const int m = 1 << n;
  std::vector<std::pair<int, int>> pairs;
  for (int block = 0; block < (1 << (n - 4)); ++block) {
    const int v = 16 * block;           // low bits 0000
    const int w = (m - 1) ^ v;          // bitwise complement, low bits 1111
    pairs.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

double fidelity_derivative_analytic(const Graph& g, int s, double t0, int order) {
  check_order(order);
  check_pst_into(propagator(g, t0), s);
  if (order % 2 == 1) return 0.0;
  return derivative_from_moments(vertex_moments(g.adjacency(), s, order), order);
}

double fidelity_derivative_analytic(const EvolutionSchedule& sched, int vertex, int order) {
  check_order(order);
  check_pst_into(schedule_propagator(sched), vertex);
  if (order % 2 == 1) return 0.0;
  const Graph& last = sched.segments().back().graph;
  return derivative_from_moments(vertex_moments(last.adjacency(), vertex, order), order);
}

double fidelity_derivative_numeric(const Graph& g, int j, int k, double t0, int order,
                                   double h) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("numeric derivative supports orders 1 and 2");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("step size must be positive");
  }
  const SpectralDecomposition d = eigendecompose(g);
  const double plus = fidelity(d, j, k, t0 + h);
  const double minus = fidelity(d, j, k, t0 - h);
  if (order == 1) return (plus - minus) / (2.0 * h);
  return (plus - 2.0 * fidelity(d, j, k, t0) + minus) / (h * h);
}

double fidelity_derivative_numeric(const EvolutionSchedule& s, int j, int k, int order,
                                   double h) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("numeric derivative supports orders 1 and 2");
  }
  const double last = s.segments().back().duration;
  if (!(h > 0.0 && h <= last)) {
    throw std::invalid_argument("step size must be positive and at most the final duration");
  }
  auto at_offset = [&](double delta) {
    std::vector<EvolutionSchedule::Segment> segs = s.segments();
    segs.back().duration = last + delta;
    const Eigen::MatrixXcd u = schedule_propagator(EvolutionSchedule(std::move(segs)));
    return std::norm(u(j, k));
  };
  const double plus = at_offset(h);
  const double minus = at_offset(-h);
  if (order == 1) return (plus - minus) / (2.0 * h);
  return (plus - 2.0 * at_offset(0.0) + minus) / (h * h);
}

CensusReport pst_census(CensusFamily family, int n, const std::vector<double>& blend_blocks,
                        double tol) {
  CensusReport report;
  report.family = family;
  report.n = n;
  report.time = std::numbers::pi / 2.0;
  report.tolerance = tol;

  std::vector<std::vector<double>> patterns;
  switch (family) {
    case CensusFamily::hypercube:
      if (n >= 4) {
        patterns.push_back(BlockSpec::plain(n).blocks);
      } else {
        patterns.push_back({});  // below one block; built directly
      }
      break;
    case CensusFamily::switched:
      patterns.push_back(BlockSpec::switched(n).blocks);
      break;
    case CensusFamily::partial_all: {
      if (n < 4 || n > 6) {
        throw std::invalid_argument("partial census enumerates patterns for 4 <= n <= 6");
      }
      const int nb = 1 << (n - 4);
      for (int bits = 0; bits < (1 << nb); ++bits) {
        std::vector<double> blocks(static_cast<std::size_t>(nb));
        for (int i = 0; i < nb; ++i) blocks[static_cast<std::size_t>(i)] = (bits >> i) & 1;
        patterns.push_back(std::move(blocks));
      }
      break;
    }
    case CensusFamily::blend:
      patterns.push_back(BlockSpec(n, blend_blocks).blocks);
      break;
  }

  std::vector<int> prot;
  if (n >= 4) prot = protected_set(n);

  for (const auto& blocks : patterns) {
    const Graph g = blocks.empty() ? hypercube(n) : build_block_cube(BlockSpec(n, blocks));
    const PstReport pst = find_pst_pairs(g, report.time, tol);

    CensusInstance inst;
    inst.blocks = blocks;
    inst.pair_count = static_cast<int>(pst.pairs.size());
    for (const auto& pair : pst.pairs) {
      inst.paired_vertices.push_back(pair.j);
      inst.paired_vertices.push_back(pair.k);
    }
    std::sort(inst.paired_vertices.begin(), inst.paired_vertices.end());

    const bool all_binary = std::all_of(blocks.begin(), blocks.end(),
                                        [](double p) { return p == 0.0 || p == 1.0; });
    const bool has_plain = std::find(blocks.begin(), blocks.end(), 1.0) != blocks.end();
    const bool has_switched = std::find(blocks.begin(), blocks.end(), 0.0) != blocks.end();
    inst.proper_partial = all_binary && has_plain && has_switched;
    inst.matches_protected_set = (inst.paired_vertices == prot);

    if (inst.proper_partial && !inst.matches_protected_set) {
      report.flagged_instances.push_back(static_cast<int>(report.instances.size()));
    }
    report.instances.push_back(std::move(inst));
  }
  return report;
}

}  // namespace pstlab
