#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pstlab {

/// Undirected weighted graph backed by a dense adjacency matrix.
///
/// The adjacency matrix doubles as the spin-network Hamiltonian (XY couplings,
/// single-excitation subspace), so construction enforces the invariants every
/// operation downstream relies on: symmetry, zero diagonal, nonnegative weights.
/// Unweighted graphs use entries in {0,1}.
class Graph {
public:
  explicit Graph(Eigen::MatrixXd adjacency);
  Graph(Eigen::MatrixXd adjacency, std::map<int, std::string> labels);

  int order() const { return static_cast<int>(adj_.rows()); }
  const Eigen::MatrixXd& adjacency() const { return adj_; }

  double weight(int j, int k) const;
  /// Weighted degree (row sum).
  double degree(int v) const;
  /// Number of nonzero upper-triangle entries.
  std::size_t edge_count() const;
  /// True iff every entry is exactly 0 or 1.
  bool is_unweighted() const;

  const std::map<int, std::string>& labels() const { return labels_; }
  void set_label(int v, std::string label);

private:
  Eigen::MatrixXd adj_;
  std::map<int, std::string> labels_;
};

/// Connection set for a Cayley graph over Z_2^n. Elements are n-bit masks;
/// the zero vector is excluded and duplicates are rejected.
struct ConnectionSet {
  ConnectionSet(int n, std::vector<std::uint32_t> elements);

  int n;
  std::vector<std::uint32_t> elements;
};

/// Maximum vertex count accepted by the graph builders. Defaults to 2^14;
/// override with the PSTLAB_SIZE_CAP environment variable.
std::size_t vertex_cap();

/// n-dimensional hypercube on 2^n vertices. Vertex i carries the binary label
/// of i; two vertices are adjacent iff their labels differ in exactly one bit.
Graph hypercube(int n);

/// Cartesian product with dictionary vertex ordering (j1, j2) -> j1*m2 + j2,
/// i.e. adjacency A1 (x) I + I (x) A2.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Cayley graph of Z_2^n: x ~ y iff x XOR y is in the connection set.
Graph cubelike(const ConnectionSet& c);

/// Connectivity of the graph whose edges are the nonzero weights.
bool is_connected(const Graph& g);

}  // namespace pstlab
