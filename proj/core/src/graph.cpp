#include "pstlab/graph.hpp"

#include <bit>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace pstlab {

namespace {

void check_adjacency(const Eigen::MatrixXd& a) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw std::invalid_argument("adjacency matrix must be square and nonempty");
  }
  const int m = static_cast<int>(a.rows());
  for (int j = 0; j < m; ++j) {
    if (a(j, j) != 0.0) {
      throw std::invalid_argument("adjacency matrix must have zero diagonal (no loops)");
    }
    for (int k = j + 1; k < m; ++k) {
      if (a(j, k) != a(k, j)) {
        throw std::invalid_argument("adjacency matrix must be symmetric");
      }
      if (a(j, k) < 0.0) {
        throw std::invalid_argument("edge weights must be nonnegative");
      }
    }
  }
}

void check_vertex_cap(std::size_t m) {
  if (m > vertex_cap()) {
    throw std::invalid_argument("requested graph order " + std::to_string(m) +
                                " exceeds the vertex cap " + std::to_string(vertex_cap()) +
                                " (set PSTLAB_SIZE_CAP to raise it)");
  }
}

}  // namespace

Graph::Graph(Eigen::MatrixXd adjacency) : adj_(std::move(adjacency)) {
  check_adjacency(adj_);
}

Graph::Graph(Eigen::MatrixXd adjacency, std::map<int, std::string> labels)
    : adj_(std::move(adjacency)), labels_(std::move(labels)) {
  check_adjacency(adj_);
  for (const auto& [v, _] : labels_) {
    if (v < 0 || v >= order()) {
      throw std::invalid_argument("label refers to a vertex outside the graph");
    }
  }
}

double Graph::weight(int j, int k) const {
  if (j < 0 || j >= order() || k < 0 || k >= order()) {
    throw std::out_of_range("vertex index out of range");
  }
  return adj_(j, k);
}

double Graph::degree(int v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex index out of range");
  }
  return adj_.row(v).sum();
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (int j = 0; j < order(); ++j) {
    for (int k = j + 1; k < order(); ++k) {
      if (adj_(j, k) != 0.0) ++count;
    }
  }
  return count;
}

bool Graph::is_unweighted() const {
  for (int j = 0; j < order(); ++j) {
    for (int k = 0; k < order(); ++k) {
      const double w = adj_(j, k);
      if (w != 0.0 && w != 1.0) return false;
    }
  }
  return true;
}

void Graph::set_label(int v, std::string label) {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex index out of range");
  }
  labels_[v] = std::move(label);
}

ConnectionSet::ConnectionSet(int n_, std::vector<std::uint32_t> elements_)
    : n(n_), elements(std::move(elements_)) {
  if (n < 1 || n > 31) {
    throw std::invalid_argument("connection set dimension must be in [1, 31]");
  }
  std::set<std::uint32_t> seen;
  for (std::uint32_t e : elements) {
    if (e == 0) {
      throw std::invalid_argument("connection set must not contain the zero vector");
    }
    if (e >= (1u << n)) {
      throw std::invalid_argument("connection set element does not fit in n bits");
    }
    if (!seen.insert(e).second) {
      throw std::invalid_argument("connection set elements must be distinct");
    }
  }
}

std::size_t vertex_cap() {
  if (const char* env = std::getenv("PSTLAB_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && cap > 0) {
      return static_cast<std::size_t>(cap);
    }
    throw std::invalid_argument("PSTLAB_SIZE_CAP must be a positive integer");
  }
  return std::size_t{1} << 14;
}

Graph hypercube(int n) {
  if (n < 1) {
    throw std::invalid_argument("hypercube dimension must be >= 1");
  }
  if (n >= 31) {
    throw std::invalid_argument("hypercube dimension too large");
  }
  const std::size_t m = std::size_t{1} << n;
  check_vertex_cap(m);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (int b = 0; b < n; ++b) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i ^ (std::size_t{1} << b))) = 1.0;
    }
  }
  return Graph(std::move(a));
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int m1 = g1.order();
  const int m2 = g2.order();
  const std::size_t m = static_cast<std::size_t>(m1) * static_cast<std::size_t>(m2);
  check_vertex_cap(m);
  const Eigen::MatrixXd& a1 = g1.adjacency();
  const Eigen::MatrixXd& a2 = g2.adjacency();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(m));
  // A1 (x) I
  for (int j1 = 0; j1 < m1; ++j1) {
    for (int k1 = 0; k1 < m1; ++k1) {
      if (a1(j1, k1) == 0.0) continue;
      for (int v = 0; v < m2; ++v) {
        a(j1 * m2 + v, k1 * m2 + v) = a1(j1, k1);
      }
    }
  }
  // I (x) A2
  for (int j1 = 0; j1 < m1; ++j1) {
    a.block(j1 * m2, j1 * m2, m2, m2) += a2;
  }
  return Graph(std::move(a));
}

Graph cubelike(const ConnectionSet& c) {
  const std::size_t m = std::size_t{1} << c.n;
  check_vertex_cap(m);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(m));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::uint32_t e : c.elements) {
      a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x ^ e)) = 1.0;
    }
  }
  return Graph(std::move(a));
}

bool is_connected(const Graph& g) {
  const int m = g.order();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  const Eigen::MatrixXd& a = g.adjacency();
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < m; ++u) {
      if (!seen[u] && a(v, u) != 0.0) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == m;
}

}  // namespace pstlab
