#pragma once

#include <cstdint>
#include <vector>

#include "regembed/autgroup.hpp"
#include "regembed/multigraph.hpp"

namespace regembed {

// Partition of the vertex set into maximal twin classes. Classes are sorted
// by smallest member and each class is sorted; within_multiplicity[c] is the
// constant edge multiplicity inside class c (0 for singletons), kept as
// metadata only.
struct Partition {
  std::vector<std::vector<int>> classes;
  std::vector<int> within_multiplicity;
  bool operator==(const Partition&) const = default;
};

// x and y are twins when every other vertex sees them with equal
// multiplicity. Throws if x == y.
bool are_twins(const Multigraph& g, int x, int y);

Partition twin_decomposition(const Multigraph& g);

// True when every twin class is a singleton.
bool is_irreducible(const Multigraph& g);

// Quotient multigraph on the twin classes: the multiplicity between two
// classes is the (constant) multiplicity between any pair of their members.
// Within-class multiplicities are dropped. p must equal twin_decomposition(g).
Multigraph quotient(const Multigraph& g, const Partition& p);

// |Aut(G)| factored as prod |X|! over twin classes times the number of
// quotient automorphisms that preserve each class's size and within-class
// multiplicity. Quotient automorphisms moving a class onto one with a
// different size or internal multiplicity do not lift, so counting the
// plain quotient group would overshoot whenever those labels differ.
struct AutOrderFactorization {
  std::vector<int> class_sizes;
  std::uint64_t quotient_aut_order = 1;
  std::uint64_t total = 1;
};

AutOrderFactorization factorize_aut_order(const Multigraph& g,
                                          const AutomorphismOptions& opts = {});

}  // namespace regembed
