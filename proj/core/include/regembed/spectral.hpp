#pragma once

#include <utility>
#include <vector>

#include "regembed/predistance.hpp"
#include "regembed/sym_matrix.hpp"

namespace regembed {

// Double-centered bilinear form L = -1/2 (I - J/n) P (I - J/n). The all-ones
// vector lies in its kernel, so the geometry of P lives on the complement.
SymMatrix bilinear_form(const SymMatrix& p);

// Orthonormal basis of the ones-complement (n rows, n-1 columns).
Eigen::MatrixXd ones_complement_basis(int n);

struct EigenGroup {
  double value = 0;
  int multiplicity = 0;
};

// Eigenvalues of L restricted to the ones-complement, grouped within an
// absolute tolerance and sorted descending. ones_eigenvalue records the
// Rayleigh quotient of the all-ones vector (must be ~0, the direction is
// deflated explicitly before grouping).
struct SpectralProfile {
  std::vector<EigenGroup> groups;
  double ones_eigenvalue = 0;
};

// group_tol_factor scales with max(1, spectral radius) to the absolute
// grouping tolerance.
inline constexpr double kDefaultGroupTolFactor = 1e-7;

SpectralProfile spectral_profile(const SymMatrix& l,
                                 double group_tol_factor = kDefaultGroupTolFactor);

// Plain grouped spectrum of a symmetric matrix, no deflation. Used for
// reporting the adjacency spectrum.
std::vector<EigenGroup> grouped_spectrum(const SymMatrix& m,
                                         double group_tol_factor = kDefaultGroupTolFactor);

enum class ShiftMode { low, high };

std::string to_string(ShiftMode mode);

// Shifted predistance whose bilinear form is positive semidefinite:
//   low   P* = P - 2 lambda_r (J - I)   (lambda_r = smallest profile eigenvalue)
//   high  P* = 2 lambda_1 (J - I) - P   (lambda_1 = largest profile eigenvalue)
// A single-group profile is eliminated entirely (all points coincide); the
// degenerate flag marks that case as well as orders < 2.
struct ReducedPredistance {
  SymMatrix pstar;
  double shift_value = 0;
  bool degenerate = false;
};

ReducedPredistance reduce_predistance(const Predistance& p, ShiftMode mode,
                                      double group_tol_factor = kDefaultGroupTolFactor);

// n minus 1 minus the multiplicity of the smallest profile group, computed
// through the case analysis on the smallest eigenvalue of the full form and
// cross-checked against the profile formula; a mismatch throws.
int zeta(const Predistance& p, double group_tol_factor = kDefaultGroupTolFactor);

// Point configuration realizing P*: eigenvectors of the reduced bilinear
// form scaled by the square roots of their eigenvalues, columns ordered by
// descending eigenvalue. Pairwise squared distances reproduce P*.
struct Embedding {
  Eigen::MatrixXd points;  // n rows, zeta columns
  int zeta = 0;            // retained column count, rank of the reduced form
  ShiftMode shift_mode = ShiftMode::low;
  double shift_value = 0;
  bool degenerate = false;
  PredistanceKind source = PredistanceKind::custom;
  SpectralProfile profile;  // profile of the unshifted bilinear form
  // Half-open column ranges, one per retained eigenvalue group.
  std::vector<std::pair<int, int>> eigenspace_slices;
};

Embedding embed(const Predistance& p, ShiftMode mode,
                double group_tol_factor = kDefaultGroupTolFactor);

// Matrix of pairwise squared distances between point rows.
SymMatrix squared_distance_matrix(const Eigen::MatrixXd& points);

}  // namespace regembed
