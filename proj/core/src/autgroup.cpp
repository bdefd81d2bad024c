#include "regembed/autgroup.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "regembed/errors.hpp"

namespace regembed {

std::vector<int> refine_colors(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> colors(n, 0);
  int count = n == 0 ? 0 : 1;
  for (;;) {
    // New key: old color plus the multiset of (neighbor color, multiplicity).
    using Key = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Key> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v].first = colors[v];
      for (int u = 0; u < n; ++u) {
        int m = g.multiplicity(v, u);
        if (m > 0) keys[v].second.emplace_back(colors[u], m);
      }
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    std::map<Key, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(keys[v], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) colors[v] = ids[keys[v]];
    if (next == count) return colors;
    count = next;
  }
}

namespace {

struct AutSearch {
  const Multigraph& g;
  const std::vector<int>& colors;
  const AutomorphismOptions& opts;
  std::vector<int> order;   // vertices, most constrained color classes first
  std::vector<int> image;   // image[v], -1 while unassigned
  std::vector<bool> used;
  std::vector<Permutation> found;

  void run() {
    const int n = g.order();
    image.assign(n, -1);
    used.assign(n, false);
    std::vector<int> class_size(n, 0);
    for (int v = 0; v < n; ++v) ++class_size[colors[v]];
    order.resize(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (class_size[colors[a]] != class_size[colors[b]])
        return class_size[colors[a]] < class_size[colors[b]];
      return colors[a] < colors[b];
    });
    extend(0);
  }

  void extend(int pos) {
    const int n = g.order();
    if (pos == n) {
      Permutation p;
      p.images = image;
      found.push_back(std::move(p));
      if (found.size() > opts.order_cap)
        throw SizeCapError("automorphism group order exceeds cap " +
                           std::to_string(opts.order_cap));
      return;
    }
    const int v = order[pos];
    for (int u = 0; u < n; ++u) {
      if (used[u] || colors[u] != colors[v]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        int w = order[q];
        if (g.multiplicity(v, w) != g.multiplicity(u, image[w])) ok = false;
      }
      if (!ok) continue;
      image[v] = u;
      used[u] = true;
      extend(pos + 1);
      image[v] = -1;
      used[u] = false;
    }
  }
};

}  // namespace

PermGroup automorphisms(const Multigraph& g, const AutomorphismOptions& opts) {
  if (g.order() > opts.max_n)
    throw SizeCapError("graph order " + std::to_string(g.order()) +
                       " exceeds group enumeration cap " + std::to_string(opts.max_n));
  auto colors = refine_colors(g);
  AutSearch search{g, colors, opts, {}, {}, {}, {}};
  search.run();
  return PermGroup::from_elements(std::move(search.found));
}

std::optional<CommuteWitness> commuting_counterexample(const SymMatrix& m, const PermGroup& grp) {
  if (m.n() != grp.degree())
    throw ValidationError("matrix size does not match permutation degree");
  const int n = m.n();
  const double tol = 1e-9 * std::max(1.0, m.max_abs());
  for (const auto& p : grp.elements())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (std::abs(m(p(i), p(j)) - m(i, j)) > tol) return CommuteWitness{p, i, j};
  return std::nullopt;
}

}  // namespace regembed
