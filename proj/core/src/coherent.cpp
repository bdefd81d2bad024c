#include "regembed/coherent.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "regembed/errors.hpp"

namespace regembed {

namespace {

// One refinement round: the new color of (i,j) is its old color together
// with the multiset over k of (color(i,k), color(k,j)). Returns the number
// of colors after renumbering in a deterministic order.
int refine_round(const Multigraph& g, Eigen::MatrixXi& color) {
  const int n = g.order();
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  std::map<Key, std::vector<std::pair<int, int>>> buckets;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Key key;
      key.first = color(i, j);
      key.second.reserve(n);
      for (int k = 0; k < n; ++k) key.second.emplace_back(color(i, k), color(k, j));
      std::sort(key.second.begin(), key.second.end());
      buckets[std::move(key)].emplace_back(i, j);
    }
  int next = 0;
  for (auto& [key, pairs] : buckets) {
    for (auto [i, j] : pairs) color(i, j) = next;
    ++next;
  }
  return next;
}

}  // namespace

CoherentBasis coherent_basis(const Multigraph& g) {
  const int n = g.order();
  CoherentBasis basis;
  basis.n = n;
  if (n == 0) {
    basis.color_of = Eigen::MatrixXi(0, 0);
    return basis;
  }

  // Seed colors with (diagonal?, multiplicity), then iterate to a fixed point.
  Eigen::MatrixXi color(n, n);
  {
    std::map<std::pair<int, int>, int> seed;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        seed.emplace(std::make_pair(i == j ? 1 : 0, i == j ? 0 : g.multiplicity(i, j)), 0);
    int next = 0;
    for (auto& [key, id] : seed) id = next++;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        color(i, j) = seed[{i == j ? 1 : 0, i == j ? 0 : g.multiplicity(i, j)}];
  }
  int count = color.maxCoeff() + 1;
  for (;;) {
    int next = refine_round(g, color);
    if (next == count) break;
    count = next;
  }

  // Renumber stably: diagonal classes first, then off-diagonal, each ordered
  // by smallest member pair in row-major order.
  std::vector<std::pair<int, int>> first_pair(count, {n, n});
  std::vector<bool> on_diagonal(count, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = color(i, j);
      if (std::pair(i, j) < first_pair[c]) first_pair[c] = {i, j};
      if (i == j) on_diagonal[c] = true;
    }
  std::vector<int> order(count);
  for (int c = 0; c < count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (on_diagonal[a] != on_diagonal[b]) return bool(on_diagonal[a]);
    return first_pair[a] < first_pair[b];
  });
  std::vector<int> rank(count);
  for (int r = 0; r < count; ++r) rank[order[r]] = r;

  basis.color_of = Eigen::MatrixXi(n, n);
  basis.classes.assign(count, Eigen::MatrixXi::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = rank[color(i, j)];
      basis.color_of(i, j) = c;
      basis.classes[c](i, j) = 1;
    }
  for (int c = 0; c < count; ++c)
    if (on_diagonal[order[c]]) basis.diagonal_count = c + 1;

  // A diagonal class may never contain an off-diagonal pair and vice versa:
  // the seed coloring separates them and refinement only splits.
  basis.transpose_of.assign(count, -1);
  for (int c = 0; c < count; ++c) {
    int i = -1, j = -1;
    for (int a = 0; a < n && i < 0; ++a)
      for (int b = 0; b < n; ++b)
        if (basis.color_of(a, b) == c) {
          i = a;
          j = b;
          break;
        }
    basis.transpose_of[c] = basis.color_of(j, i);
  }
  // Transposition must act consistently on whole classes.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (basis.transpose_of[basis.color_of(i, j)] != basis.color_of(j, i))
        throw std::logic_error("coherent classes are not closed under transposition");

  return basis;
}

Predistance predistance_from_basis(const CoherentBasis& basis,
                                   const std::map<int, double>& coefficients) {
  const int n = basis.n;
  for (const auto& [c, lambda] : coefficients) {
    if (c < 0 || c >= basis.class_count())
      throw ValidationError("class index " + std::to_string(c) + " out of range");
    if (c < basis.diagonal_count)
      throw ValidationError("diagonal class " + std::to_string(c) +
                            " cannot carry a coefficient");
    auto t = coefficients.find(basis.transpose_of[c]);
    if (t != coefficients.end() && t->second != lambda)
      throw ValidationError("transpose classes " + std::to_string(c) + " and " +
                            std::to_string(basis.transpose_of[c]) +
                            " have conflicting coefficients");
  }
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  std::vector<bool> done(basis.class_count(), false);
  for (const auto& [c, lambda] : coefficients) {
    if (done[c]) continue;
    done[c] = true;
    done[basis.transpose_of[c]] = true;
    Eigen::MatrixXd b = basis.classes[c].cast<double>();
    acc += lambda * (b + b.transpose());
  }
  return Predistance{SymMatrix::from_symmetric(acc), PredistanceKind::custom};
}

Predistance make_reconstructing(const CoherentBasis& basis, const Multigraph& g) {
  if (basis.n != g.order())
    throw ValidationError("coherent basis does not match graph order");
  std::map<int, double> coeffs;
  double value = 0;
  for (int c = basis.diagonal_count; c < basis.class_count(); ++c) {
    if (basis.transpose_of[c] < c) continue;  // one coefficient per transpose pair
    value += 1.0;
    // A self-transpose class contributes 2*lambda to each entry, a proper
    // pair contributes lambda; aim the entry value at 1, 2, 3, ... so the
    // emitted off-diagonal values are pairwise distinct.
    coeffs[c] = basis.is_symmetric_class(c) ? value / 2.0 : value;
  }
  return predistance_from_basis(basis, coeffs);
}

Predistance perturb_reconstructing(const Predistance& p, const Multigraph& g, double eps) {
  if (p.matrix.n() != g.order())
    throw ValidationError("predistance size does not match graph order");
  SymMatrix a = adjacency_matrix(g);
  auto perturbed = [&](double e) {
    SymMatrix m(p.matrix.n());
    for (int i = 0; i < m.n(); ++i)
      for (int j = i + 1; j < m.n(); ++j) m.set(i, j, p.matrix(i, j) + e * a(i, j));
    return Predistance{m, PredistanceKind::custom};
  };
  if (eps != 0.0) {
    auto result = perturbed(eps);
    if (!check_reconstructing(result, g).ok)
      throw ValidationError("requested perturbation does not make the predistance reconstructing");
    return result;
  }
  // Smallest positive gap between distinct entry values bounds the safe
  // perturbation; halve from there until the check passes.
  std::vector<double> values;
  for (int i = 0; i < p.matrix.n(); ++i)
    for (int j = i + 1; j < p.matrix.n(); ++j) values.push_back(p.matrix(i, j));
  std::sort(values.begin(), values.end());
  double gap = 0;
  for (size_t k = 0; k + 1 < values.size(); ++k) {
    double d = values[k + 1] - values[k];
    if (d > 1e-9 * std::max(1.0, p.matrix.max_abs()) && (gap == 0 || d < gap)) gap = d;
  }
  double start = gap > 0 ? gap / (2.0 * std::max(1, g.max_multiplicity())) : 1.0;
  for (double e = start; e > start * 1e-18; e /= 2) {
    auto result = perturbed(e);
    if (check_reconstructing(result, g).ok) return result;
  }
  throw ValidationError("could not find a perturbation making the predistance reconstructing");
}

}  // namespace regembed
