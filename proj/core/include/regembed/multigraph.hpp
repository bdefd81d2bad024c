#pragma once

#include <array>
#include <vector>

#include "regembed/sym_matrix.hpp"

namespace regembed {

// Loopless undirected multigraph on vertices 0..n-1, stored as a symmetric
// multiplicity table with zero diagonal. Vertices are 1-based only at the
// I/O boundary.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);

  int order() const { return n_; }
  int multiplicity(int i, int j) const;
  // Accumulates m onto the existing multiplicity. Throws on loops,
  // out-of-range vertices, or negative m.
  void add_edge(int i, int j, int m = 1);
  void set_multiplicity(int i, int j, int m);

  bool is_simple() const;  // all multiplicities <= 1
  int max_multiplicity() const;
  int degree(int v) const;  // sum of multiplicities at v
  std::vector<int> degrees() const;
  // Edges as (i, j, m) with i < j and m > 0, sorted.
  std::vector<std::array<int, 3>> edge_list() const;

  bool operator==(const Multigraph&) const = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<int> mu_;  // row-major n*n
};

SymMatrix adjacency_matrix(const Multigraph& g);

// Degrees, connectivity, and all-pairs shortest-path edge counts (BFS per
// vertex). dist(i,j) == kUnreachable marks an infinite distance.
struct GraphMetrics {
  static constexpr int kUnreachable = -1;
  int n = 0;
  std::vector<int> degrees;
  bool connected = true;
  std::vector<int> dist;  // row-major n*n
  int distance(int i, int j) const { return dist[static_cast<size_t>(i) * n + j]; }
};

GraphMetrics graph_metrics(const Multigraph& g);

}  // namespace regembed
