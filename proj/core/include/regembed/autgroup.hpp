#pragma once

#include <cstdint>
#include <optional>

#include "regembed/multigraph.hpp"
#include "regembed/permutation.hpp"
#include "regembed/sym_matrix.hpp"

namespace regembed {

struct AutomorphismOptions {
  int max_n = 12;                    // enumeration refuses larger graphs
  std::uint64_t order_cap = 100000;  // and groups larger than this
};

// Stable vertex coloring refined from (degree, multiset of neighbor colors
// weighted by multiplicity), iterated to a fixed point. Automorphisms
// preserve it, so equal colors are a necessary condition for mapping one
// vertex to another.
std::vector<int> refine_colors(const Multigraph& g);

// The full automorphism group, enumerated by backtracking over
// color-compatible images with partial multiplicity consistency checks.
PermGroup automorphisms(const Multigraph& g, const AutomorphismOptions& opts = {});

struct CommuteWitness {
  Permutation perm;
  int i = 0;
  int j = 0;
};

// Checks M[g(i)][g(j)] == M[i][j] for every group element, within an
// absolute tolerance of 1e-9 scaled by the largest entry magnitude.
// Returns the first counterexample, or nullopt when M commutes.
std::optional<CommuteWitness> commuting_counterexample(const SymMatrix& m, const PermGroup& grp);

inline bool commutes_with_group(const SymMatrix& m, const PermGroup& grp) {
  return !commuting_counterexample(m, grp).has_value();
}

}  // namespace regembed
