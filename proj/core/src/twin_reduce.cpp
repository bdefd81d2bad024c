#include "regembed/twin_reduce.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "regembed/errors.hpp"

namespace regembed {

bool are_twins(const Multigraph& g, int x, int y) {
  if (x == y) throw ValidationError("are_twins needs two distinct vertices");
  for (int v = 0; v < g.order(); ++v) {
    if (v == x || v == y) continue;
    if (g.multiplicity(x, v) != g.multiplicity(y, v)) return false;
  }
  return true;
}

Partition twin_decomposition(const Multigraph& g) {
  const int n = g.order();
  // Twinship is an equivalence relation, so a union-find over pairwise tests
  // produces the maximal classes.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (find(x) != find(y) && are_twins(g, x, y)) parent[find(y)] = find(x);

  std::vector<std::vector<int>> buckets(n);
  for (int v = 0; v < n; ++v) buckets[find(v)].push_back(v);
  Partition p;
  for (int r = 0; r < n; ++r) {
    if (buckets[r].empty()) continue;
    std::sort(buckets[r].begin(), buckets[r].end());
    p.within_multiplicity.push_back(
        buckets[r].size() >= 2 ? g.multiplicity(buckets[r][0], buckets[r][1]) : 0);
    p.classes.push_back(std::move(buckets[r]));
  }
  return p;
}

bool is_irreducible(const Multigraph& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (are_twins(g, x, y)) return false;
  return true;
}

Multigraph quotient(const Multigraph& g, const Partition& p) {
  if (!(p == twin_decomposition(g)))
    throw ValidationError("partition is not the twin decomposition of the graph");
  const int k = static_cast<int>(p.classes.size());
  Multigraph q(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      q.set_multiplicity(a, b, g.multiplicity(p.classes[a][0], p.classes[b][0]));
  return q;
}

AutOrderFactorization factorize_aut_order(const Multigraph& g,
                                          const AutomorphismOptions& opts) {
  auto p = twin_decomposition(g);
  AutOrderFactorization f;
  f.total = 1;
  for (const auto& cls : p.classes) {
    f.class_sizes.push_back(static_cast<int>(cls.size()));
    for (std::uint64_t i = 2; i <= cls.size(); ++i) f.total *= i;
  }
  // Only quotient automorphisms that map each class to one of equal size and
  // equal internal multiplicity lift to automorphisms of g. The quotient
  // itself has forgotten both labels, so filter the enumeration by them.
  auto group = automorphisms(quotient(g, p), opts);
  std::uint64_t lifting = 0;
  for (const auto& perm : group.elements()) {
    bool preserves = true;
    for (std::size_t c = 0; c < p.classes.size() && preserves; ++c) {
      int image = perm.images[c];
      preserves = f.class_sizes[image] == f.class_sizes[c] &&
                  p.within_multiplicity[image] == p.within_multiplicity[c];
    }
    if (preserves) ++lifting;
  }
  f.quotient_aut_order = lifting;
  f.total *= f.quotient_aut_order;
  return f;
}

}  // namespace regembed
