#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regembed/autgroup.hpp"
#include "regembed/multigraph.hpp"
#include "regembed/sym_matrix.hpp"

namespace regembed {

// Built-in symmetric zero-diagonal matrices attached to a graph:
//   adjacency            entry is the edge multiplicity
//   complement_indicator 0 on the diagonal and between adjacent vertices, 1 elsewhere
//   graph_distance       shortest-path edge count
//   czekanovski_dice     1 - 2/(d(i)+d(j)) on edges, 1 on non-edges
//   q_distance           1 - 1/sqrt(d(i)d(j)) on edges, 1 on non-edges
enum class PredistanceKind {
  adjacency,
  complement_indicator,
  graph_distance,
  czekanovski_dice,
  q_distance,
  custom,
};

std::string to_string(PredistanceKind kind);
std::optional<PredistanceKind> predistance_kind_from_string(const std::string& name);

struct Predistance {
  SymMatrix matrix;
  PredistanceKind kind = PredistanceKind::custom;
};

// Builds one of the graph-derived kinds. The distance-based kinds require a
// connected graph; complement_indicator, czekanovski_dice, and q_distance
// require a simple one; the last two also require order >= 3.
Predistance build_predistance(const Multigraph& g, PredistanceKind kind);

// Wraps an externally supplied matrix, validating symmetry and the zero
// diagonal.
Predistance make_custom_predistance(const SymMatrix& m);

// A predistance reconstructs the graph when equal off-diagonal entries always
// face equal multiplicities, i.e. the value -> multiplicity map Xi is well
// defined. Values are grouped with absolute tolerance 1e-9 * max(1, scale).
struct XiEntry {
  double value = 0;
  int multiplicity = 0;
};

struct ReconstructingCheck {
  bool ok = false;
  std::vector<XiEntry> xi;  // sorted by value, only filled when ok
  // Two vertex pairs with equal entry but different multiplicity.
  struct Witness {
    int i = 0, j = 0, i2 = 0, j2 = 0;
  };
  std::optional<Witness> witness;
};

ReconstructingCheck check_reconstructing(const Predistance& p, const Multigraph& g);

struct CommutingCheck {
  bool ok = false;
  std::optional<CommuteWitness> witness;
};

// Enumerates Aut(g) and tests invariance of the matrix under it.
CommutingCheck check_commuting(const Predistance& p, const Multigraph& g,
                               const AutomorphismOptions& opts = {});

}  // namespace regembed
