#include "regembed/predistance.hpp"

#include <algorithm>
#include <cmath>

#include "regembed/errors.hpp"

namespace regembed {

std::string to_string(PredistanceKind kind) {
  switch (kind) {
    case PredistanceKind::adjacency: return "adjacency";
    case PredistanceKind::complement_indicator: return "complement_indicator";
    case PredistanceKind::graph_distance: return "graph_distance";
    case PredistanceKind::czekanovski_dice: return "czekanovski_dice";
    case PredistanceKind::q_distance: return "q_distance";
    case PredistanceKind::custom: return "custom";
  }
  return "custom";
}

std::optional<PredistanceKind> predistance_kind_from_string(const std::string& name) {
  for (auto kind : {PredistanceKind::adjacency, PredistanceKind::complement_indicator,
                    PredistanceKind::graph_distance, PredistanceKind::czekanovski_dice,
                    PredistanceKind::q_distance, PredistanceKind::custom})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

Predistance build_predistance(const Multigraph& g, PredistanceKind kind) {
  const int n = g.order();
  const bool needs_connected = kind == PredistanceKind::graph_distance ||
                               kind == PredistanceKind::czekanovski_dice ||
                               kind == PredistanceKind::q_distance;
  const bool needs_simple = kind == PredistanceKind::complement_indicator ||
                            kind == PredistanceKind::czekanovski_dice ||
                            kind == PredistanceKind::q_distance;
  if (needs_simple && !g.is_simple())
    throw ValidationError(to_string(kind) + " is only defined for simple graphs");
  if ((kind == PredistanceKind::czekanovski_dice || kind == PredistanceKind::q_distance) && n < 3)
    throw ValidationError(to_string(kind) + " needs at least 3 vertices");

  GraphMetrics metrics;
  if (needs_connected) {
    metrics = graph_metrics(g);
    if (!metrics.connected)
      throw ValidationError(to_string(kind) + " is only defined for connected graphs");
  }

  SymMatrix m(n);
  switch (kind) {
    case PredistanceKind::adjacency:
      m = adjacency_matrix(g);
      break;
    case PredistanceKind::complement_indicator:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, g.multiplicity(i, j) > 0 ? 0.0 : 1.0);
      break;
    case PredistanceKind::graph_distance:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, metrics.distance(i, j));
      break;
    case PredistanceKind::czekanovski_dice:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          m.set(i, j, g.multiplicity(i, j) > 0
                          ? 1.0 - 2.0 / (g.degree(i) + g.degree(j))
                          : 1.0);
      break;
    case PredistanceKind::q_distance:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          m.set(i, j, g.multiplicity(i, j) > 0
                          ? 1.0 - 1.0 / std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j))
                          : 1.0);
      break;
    case PredistanceKind::custom:
      throw ValidationError("custom predistances are supplied, not built");
  }
  return Predistance{m, kind};
}

Predistance make_custom_predistance(const SymMatrix& m) {
  for (int i = 0; i < m.n(); ++i)
    if (m(i, i) != 0.0) throw ValidationError("predistance diagonal must be zero");
  return Predistance{m, PredistanceKind::custom};
}

ReconstructingCheck check_reconstructing(const Predistance& p, const Multigraph& g) {
  const int n = g.order();
  if (p.matrix.n() != n) throw ValidationError("predistance size does not match graph order");
  const double tol = 1e-9 * std::max(1.0, p.matrix.max_abs());

  struct Entry {
    double value;
    int mult;
    int i, j;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      entries.push_back({p.matrix(i, j), g.multiplicity(i, j), i, j});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.value < b.value; });

  ReconstructingCheck r;
  // Adjacent entries within tolerance must agree on multiplicity; scanning
  // consecutive pairs finds a violation whenever any exists.
  for (size_t k = 0; k + 1 < entries.size(); ++k) {
    const auto& a = entries[k];
    const auto& b = entries[k + 1];
    if (b.value - a.value <= tol && a.mult != b.mult) {
      r.ok = false;
      r.witness = ReconstructingCheck::Witness{a.i, a.j, b.i, b.j};
      return r;
    }
  }
  r.ok = true;
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k == 0 || entries[k].value - entries[k - 1].value > tol)
      r.xi.push_back({entries[k].value, entries[k].mult});
  }
  return r;
}

CommutingCheck check_commuting(const Predistance& p, const Multigraph& g,
                               const AutomorphismOptions& opts) {
  if (p.matrix.n() != g.order())
    throw ValidationError("predistance size does not match graph order");
  auto aut = automorphisms(g, opts);
  CommutingCheck c;
  c.witness = commuting_counterexample(p.matrix, aut);
  c.ok = !c.witness.has_value();
  return c;
}

}  // namespace regembed
