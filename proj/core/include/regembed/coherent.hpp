#pragma once

#include <map>
#include <vector>

#include "regembed/multigraph.hpp"
#include "regembed/predistance.hpp"

namespace regembed {

// Basis of the coherent closure of the adjacency matrix: 0/1 matrices that
// partition the ordered vertex pairs, with the diagonal classes listed first
// so that classes sum to J, a prefix sums to I, and the set is closed under
// transposition. Built by stable pairwise color refinement seeded with
// (diagonal?, multiplicity).
struct CoherentBasis {
  int n = 0;
  int diagonal_count = 0;                 // classes 0..diagonal_count-1 cover the diagonal
  std::vector<Eigen::MatrixXi> classes;   // 0/1 matrices
  std::vector<int> transpose_of;          // class index of each class's transpose
  Eigen::MatrixXi color_of;               // class index per ordered pair

  int class_count() const { return static_cast<int>(classes.size()); }
  bool is_symmetric_class(int c) const { return transpose_of[c] == c; }
};

CoherentBasis coherent_basis(const Multigraph& g);

// P = sum over chosen off-diagonal classes of lambda * (B + B^T). Keys are
// class indices; diagonal classes are rejected, and when both members of a
// transpose pair are given their coefficients must agree.
Predistance predistance_from_basis(const CoherentBasis& basis,
                                   const std::map<int, double>& coefficients);

// Commuting predistance with pairwise distinct off-diagonal values 1, 2, 3...
// assigned per transpose-pair orbit in class order, which makes it
// reconstructing: each class has constant multiplicity, and distinct values
// keep the value -> multiplicity map well defined.
Predistance make_reconstructing(const CoherentBasis& basis, const Multigraph& g);

// P + eps * A for an externally supplied commuting predistance; eps defaults
// to an automatic choice (halving search) that makes the result pass
// check_reconstructing. Commutation is preserved since A commutes.
Predistance perturb_reconstructing(const Predistance& p, const Multigraph& g, double eps = 0.0);

}  // namespace regembed
