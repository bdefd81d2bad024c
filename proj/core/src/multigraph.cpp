#include "regembed/multigraph.hpp"

#include <deque>
#include <string>

#include "regembed/errors.hpp"

namespace regembed {

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 0) throw ValidationError("multigraph order must be non-negative");
  mu_.assign(static_cast<size_t>(n) * n, 0);
}

void Multigraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ValidationError("vertex index " + std::to_string(v + 1) + " out of range 1.." +
                          std::to_string(n_));
}

int Multigraph::multiplicity(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return mu_[static_cast<size_t>(i) * n_ + j];
}

void Multigraph::add_edge(int i, int j, int m) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw ValidationError("loop edge at vertex " + std::to_string(i + 1));
  if (m < 0) throw ValidationError("negative edge multiplicity");
  mu_[static_cast<size_t>(i) * n_ + j] += m;
  mu_[static_cast<size_t>(j) * n_ + i] += m;
}

void Multigraph::set_multiplicity(int i, int j, int m) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw ValidationError("loop edge at vertex " + std::to_string(i + 1));
  if (m < 0) throw ValidationError("negative edge multiplicity");
  mu_[static_cast<size_t>(i) * n_ + j] = m;
  mu_[static_cast<size_t>(j) * n_ + i] = m;
}

bool Multigraph::is_simple() const { return max_multiplicity() <= 1; }

int Multigraph::max_multiplicity() const {
  int m = 0;
  for (int v : mu_) m = std::max(m, v);
  return m;
}

int Multigraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int u = 0; u < n_; ++u) d += mu_[static_cast<size_t>(v) * n_ + u];
  return d;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<std::array<int, 3>> Multigraph::edge_list() const {
  std::vector<std::array<int, 3>> edges;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      int m = mu_[static_cast<size_t>(i) * n_ + j];
      if (m > 0) edges.push_back({i, j, m});
    }
  return edges;
}

SymMatrix adjacency_matrix(const Multigraph& g) {
  SymMatrix a(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) a.set(i, j, g.multiplicity(i, j));
  return a;
}

GraphMetrics graph_metrics(const Multigraph& g) {
  const int n = g.order();
  GraphMetrics m;
  m.n = n;
  m.degrees = g.degrees();
  m.dist.assign(static_cast<size_t>(n) * n, GraphMetrics::kUnreachable);
  for (int s = 0; s < n; ++s) {
    auto* row = m.dist.data() + static_cast<size_t>(s) * n;
    row[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u = 0; u < n; ++u)
        if (g.multiplicity(v, u) > 0 && row[u] == GraphMetrics::kUnreachable) {
          row[u] = row[v] + 1;
          queue.push_back(u);
        }
    }
    for (int u = 0; u < n; ++u)
      if (row[u] == GraphMetrics::kUnreachable) m.connected = false;
  }
  return m;
}

}  // namespace regembed
