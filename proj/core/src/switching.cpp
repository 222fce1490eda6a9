#include "pstlab/switching.hpp"

#include <bit>
#include <algorithm>
#include <cstdint>

namespace pstlab {

namespace {

void check_partition_shape(const Partition& p, int m) {
  std::vector<char> covered(static_cast<std::size_t>(m), 0);
  auto take = [&](int v, const char* where) {
    if (v < 0 || v >= m) {
      throw std::invalid_argument(std::string("partition ") + where +
                                  " contains an out-of-range vertex");
    }
    if (covered[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("partition cells and residual must be disjoint");
    }
    covered[static_cast<std::size_t>(v)] = 1;
  };
  for (const auto& cell : p.cells) {
    if (cell.empty()) {
      throw std::invalid_argument("partition cells must be nonempty");
    }
    for (int v : cell) take(v, "cell");
  }
  for (int v : p.residual) take(v, "residual");
  if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c == 1; })) {
    throw std::invalid_argument("partition must cover every vertex");
  }
}

int neighbours_in(const Eigen::MatrixXd& a, int v, const std::vector<int>& cell) {
  int count = 0;
  for (int u : cell) {
    if (u != v && a(v, u) != 0.0) ++count;
  }
  return count;
}

}  // namespace

GmPartitionError::GmPartitionError(std::string what, GmValidationReport report)
    : std::invalid_argument(std::move(what)), report_(std::move(report)) {}

GmValidationReport validate_gm_partition(const Graph& g, const Partition& p) {
  if (!g.is_unweighted()) {
    throw std::invalid_argument("GM switching is defined for unweighted graphs only");
  }
  check_partition_shape(p, g.order());

  const Eigen::MatrixXd& a = g.adjacency();
  GmValidationReport report;
  const int k = static_cast<int>(p.cells.size());

  // (a) within-partition regularity, i = j included
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int first = neighbours_in(a, p.cells[i][0], p.cells[j]);
      for (std::size_t t = 1; t < p.cells[i].size(); ++t) {
        const int count = neighbours_in(a, p.cells[i][t], p.cells[j]);
        if (count != first) {
          report.ok = false;
          report.violations.push_back(
              {GmViolation::Condition::cell_pair_regularity, i, j, -1,
               "vertices " + std::to_string(p.cells[i][0]) + " and " +
                   std::to_string(p.cells[i][t]) + " of cell " + std::to_string(i) +
                   " have " + std::to_string(first) + " vs " + std::to_string(count) +
                   " neighbours in cell " + std::to_string(j)});
          break;
        }
      }
    }
  }

  // (b) residual neighbour counts: 0, n_i/2 (even cells only), or n_i
  for (int v : p.residual) {
    for (int i = 0; i < k; ++i) {
      const int ni = static_cast<int>(p.cells[i].size());
      const int count = neighbours_in(a, v, p.cells[i]);
      const bool half_ok = (ni % 2 == 0) && (count == ni / 2);
      if (count != 0 && count != ni && !half_ok) {
        report.ok = false;
        report.violations.push_back(
            {GmViolation::Condition::residual_neighbour_count, i, -1, v,
             "residual vertex " + std::to_string(v) + " has " + std::to_string(count) +
                 " neighbours in cell " + std::to_string(i) + " of size " +
                 std::to_string(ni)});
      }
    }
  }

  return report;
}

Graph gm_switch(const Graph& g, const Partition& p) {
  GmValidationReport report = validate_gm_partition(g, p);
  if (!report.ok) {
    std::string what = "partition does not satisfy the GM switching conditions:";
    for (const auto& v : report.violations) {
      what += "\n  " + v.detail;
    }
    throw GmPartitionError(std::move(what), std::move(report));
  }

  Eigen::MatrixXd a = g.adjacency();
  for (int v : p.residual) {
    for (const auto& cell : p.cells) {
      const int ni = static_cast<int>(cell.size());
      if (ni % 2 != 0) continue;
      if (neighbours_in(g.adjacency(), v, cell) != ni / 2) continue;
      for (int u : cell) {
        a(v, u) = 1.0 - a(v, u);
        a(u, v) = a(v, u);
      }
    }
  }
  return Graph(std::move(a));
}

Partition canonical_q4_partition() {
  Partition p;
  p.cells.resize(4);
  p.cells[0] = {0};
  for (int v = 1; v < 15; ++v) {
    const int w = std::popcount(static_cast<unsigned>(v));
    if (w == 1) p.residual.push_back(v);
    if (w == 2) p.cells[1].push_back(v);
    if (w == 3) p.cells[2].push_back(v);
  }
  p.cells[3] = {15};
  return p;
}

Graph switched_hypercube(int n) {
  if (n < 4) {
    throw std::invalid_argument("switched hypercube requires n >= 4");
  }
  Graph q4_switched = gm_switch(hypercube(4), canonical_q4_partition());
  if (n == 4) return q4_switched;
  return cartesian_product(hypercube(n - 4), q4_switched);
}

BlockSpec::BlockSpec(int n_, std::vector<double> blocks_)
    : n(n_), blocks(std::move(blocks_)) {
  if (n < 4) {
    throw std::invalid_argument("block cube requires n >= 4");
  }
  if (n >= 31) {
    throw std::invalid_argument("block cube dimension too large");
  }
  const std::size_t expected = std::size_t{1} << (n - 4);
  if (blocks.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " block weights, got " + std::to_string(blocks.size()));
  }
  for (double p : blocks) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("block weights must lie in [0, 1]");
    }
  }
}

BlockSpec BlockSpec::plain(int n) {
  return BlockSpec(n, std::vector<double>(std::size_t{1} << (n - 4), 1.0));
}

BlockSpec BlockSpec::switched(int n) {
  return BlockSpec(n, std::vector<double>(std::size_t{1} << (n - 4), 0.0));
}

Graph build_block_cube(const BlockSpec& spec) {
  const std::size_t m = std::size_t{1} << spec.n;
  if (m > vertex_cap()) {
    throw std::invalid_argument("block cube exceeds the vertex cap");
  }
  const Eigen::MatrixXd plain4 = hypercube(4).adjacency();
  const Eigen::MatrixXd switched4 = switched_hypercube(4).adjacency();

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(m));
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    const double p = spec.blocks[b];
    a.block(static_cast<Eigen::Index>(16 * b), static_cast<Eigen::Index>(16 * b), 16, 16) =
        p * plain4 + (1.0 - p) * switched4;
  }
  if (spec.n > 4) {
    // A(Q_{n-4}) (x) I_16 connects corresponding vertices of adjacent blocks
    const Eigen::MatrixXd outer = hypercube(spec.n - 4).adjacency();
    for (int j = 0; j < outer.rows(); ++j) {
      for (int kk = 0; kk < outer.cols(); ++kk) {
        if (outer(j, kk) == 0.0) continue;
        for (int v = 0; v < 16; ++v) {
          a(16 * j + v, 16 * kk + v) = outer(j, kk);
        }
      }
    }
  }
  return Graph(std::move(a));
}

}  // namespace pstlab
