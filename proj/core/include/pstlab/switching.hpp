#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pstlab/graph.hpp"

namespace pstlab {

/// Vertex partition (C_1, ..., C_k, D) used for Godsil-McKay switching.
/// Cells must be nonempty and pairwise disjoint; together with the residual
/// set D they must cover {0, ..., m-1}. D may be empty.
struct Partition {
  std::vector<std::vector<int>> cells;
  std::vector<int> residual;
};

struct GmViolation {
  enum class Condition {
    cell_pair_regularity,    // vertices of C_i disagree on #neighbours in C_j
    residual_neighbour_count // v in D has a count other than 0, n_i/2, n_i
  };
  Condition condition;
  int cell_i = -1;
  int cell_j = -1;  // condition (a) only
  int vertex = -1;  // condition (b) only
  std::string detail;
};

struct GmValidationReport {
  bool ok = true;
  std::vector<GmViolation> violations;
};

class GmPartitionError : public std::invalid_argument {
public:
  GmPartitionError(std::string what, GmValidationReport report);
  const GmValidationReport& report() const { return report_; }

private:
  GmValidationReport report_;
};

/// Checks the switching conditions on an unweighted graph:
/// (a) any two vertices of C_i have the same number of neighbours in C_j (i = j
///     included), and (b) every v in D has 0, n_i/2, or n_i neighbours in C_i.
/// n_i/2 is admissible only for even cells. Weighted input is rejected.
GmValidationReport validate_gm_partition(const Graph& g, const Partition& p);

/// Local switching: for each v in D with exactly n_i/2 neighbours in C_i,
/// complement v's adjacencies within C_i. Requires a valid partition (throws
/// GmPartitionError carrying the report otherwise). The result is cospectral
/// to the input; applying the same switch twice restores the input.
Graph gm_switch(const Graph& g, const Partition& p);

/// The distance partition of the 4-cube from vertex 0000: cells {0000},
/// {weight-2 vertices}, {weight-3 vertices}, {1111}, residual {weight-1
/// vertices}. This is the partition that produces the switched 4-cube.
Partition canonical_q4_partition();

/// Switched n-cube: the Cartesian product of Q_{n-4} with the GM-switched
/// 4-cube (n = 4 gives the switched 4-cube itself). Cospectral to Q_n,
/// n-regular, but not isomorphic to it.
Graph switched_hypercube(int n);

/// Block description of an n-cube variant: one weight per 16-vertex block,
/// p = 1 keeps the plain 4-cube, p = 0 substitutes the switched 4-cube, and
/// intermediate p blends the two adjacency matrices convexly.
struct BlockSpec {
  BlockSpec(int n, std::vector<double> blocks);

  static BlockSpec plain(int n);
  static BlockSpec switched(int n);

  int n;
  std::vector<double> blocks;  // length 2^(n-4), each in [0, 1]
};

/// Assembles blockdiag(M_1, ..., M_{2^{n-4}}) + A(Q_{n-4}) (x) I_16 with
/// M_j = p_j A(Q_4) + (1-p_j) A(switched Q_4). All-plain specs reproduce
/// hypercube(n) exactly; all-switched specs reproduce switched_hypercube(n).
Graph build_block_cube(const BlockSpec& spec);

}  // namespace pstlab
