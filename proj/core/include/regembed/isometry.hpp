#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "regembed/multigraph.hpp"
#include "regembed/permutation.hpp"
#include "regembed/spectral.hpp"

namespace regembed {

struct IsometryOptions {
  int max_n = 12;
  std::uint64_t order_cap = 100000;
  // Squared distances match within tol_factor * (largest squared distance).
  double tol_factor = 1e-6;
};

// All vertex permutations that preserve the pairwise distances of the point
// configuration. Backtracking, pruned by per-point sorted distance profiles.
PermGroup distance_preserving_permutations(const Eigen::MatrixXd& points,
                                           const IsometryOptions& opts = {});

// Exhaustive regularity certificate: the embedding is regular exactly when
// the distance-preserving permutations coincide with the automorphisms.
struct RegularityCertificate {
  std::uint64_t aut_order = 0;
  std::uint64_t isometry_perm_order = 0;
  bool groups_equal = false;
  bool injective = false;     // no two points coincide
  bool spans = false;         // points affinely span all zeta dimensions
  bool commuting = false;     // predistance invariant under Aut
  bool reconstructing = false;

  struct Witnesses {
    std::optional<std::pair<int, int>> coincident_points;
    std::optional<CommuteWitness> commuting;
    std::optional<std::array<int, 4>> reconstructing;  // (i, j, i2, j2), 1-based
    // A permutation in one group but not the other; side is "isometry_only"
    // or "automorphism_only".
    std::optional<Permutation> group_mismatch;
    std::string group_mismatch_side;
  };
  Witnesses witnesses;
};

// Requires an irreducible graph (throws ValidationError otherwise) small
// enough for both exhaustive searches.
RegularityCertificate verify_regular(const Multigraph& g, const Predistance& p,
                                     const Embedding& emb, const IsometryOptions& opts = {});

}  // namespace regembed
