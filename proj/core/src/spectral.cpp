#include "regembed/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "regembed/errors.hpp"

namespace regembed {

SymMatrix bilinear_form(const SymMatrix& p) {
  const int n = p.n();
  if (n == 0) return SymMatrix(0);
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) -
                      Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::MatrixXd l = -0.5 * h * p.mat() * h;
  return SymMatrix::symmetrized(l);
}

Eigen::MatrixXd ones_complement_basis(int n) {
  // Helmert-style basis: column k is (1,...,1,-(k+1),0,...)/sqrt((k+1)(k+2)),
  // with k+1 leading ones. Orthonormal and orthogonal to the all-ones vector.
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, std::max(0, n - 1));
  for (int k = 0; k + 1 < n; ++k) {
    double scale = 1.0 / std::sqrt(static_cast<double>(k + 1) * (k + 2));
    for (int i = 0; i <= k; ++i) q(i, k) = scale;
    q(k + 1, k) = -(k + 1) * scale;
  }
  return q;
}

namespace {

// Groups sorted-ascending eigenvalues by gap, returns descending groups.
std::vector<EigenGroup> group_sorted(const Eigen::VectorXd& vals, double tol) {
  std::vector<EigenGroup> groups;
  for (int i = 0; i < vals.size(); ++i) {
    if (groups.empty() || vals[i] - vals[i - 1] > tol)
      groups.push_back({vals[i], 1});
    else {
      auto& grp = groups.back();
      // Keep the group value at the running mean for stable reporting.
      grp.value = (grp.value * grp.multiplicity + vals[i]) / (grp.multiplicity + 1);
      ++grp.multiplicity;
    }
  }
  std::reverse(groups.begin(), groups.end());
  return groups;
}

double grouping_tol(const Eigen::VectorXd& vals, double factor) {
  double radius = vals.size() == 0 ? 0.0 : std::max(std::abs(vals[0]), std::abs(vals[vals.size() - 1]));
  return factor * std::max(1.0, radius);
}

}  // namespace

SpectralProfile spectral_profile(const SymMatrix& l, double group_tol_factor) {
  const int n = l.n();
  SpectralProfile prof;
  if (n == 0) return prof;

  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  double kernel_tol = 1e-9 * std::max(1.0, l.max_abs());
  Eigen::VectorXd image = l.mat() * ones;
  if (image.cwiseAbs().maxCoeff() > kernel_tol * n)
    throw ValidationError("all-ones vector is not in the kernel of the bilinear form");
  prof.ones_eigenvalue = ones.dot(image) / n;

  if (n == 1) return prof;
  Eigen::MatrixXd q = ones_complement_basis(n);
  Eigen::MatrixXd restricted = q.transpose() * l.mat() * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      0.5 * (restricted + restricted.transpose()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  const Eigen::VectorXd vals = solver.eigenvalues();
  prof.groups = group_sorted(vals, grouping_tol(vals, group_tol_factor));
  return prof;
}

std::vector<EigenGroup> grouped_spectrum(const SymMatrix& m, double group_tol_factor) {
  if (m.n() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.mat());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  const Eigen::VectorXd vals = solver.eigenvalues();
  return group_sorted(vals, grouping_tol(vals, group_tol_factor));
}

std::string to_string(ShiftMode mode) { return mode == ShiftMode::low ? "low" : "high"; }

ReducedPredistance reduce_predistance(const Predistance& p, ShiftMode mode,
                                      double group_tol_factor) {
  auto prof = spectral_profile(bilinear_form(p.matrix), group_tol_factor);
  ReducedPredistance r;
  const int n = p.matrix.n();
  if (prof.groups.empty()) {
    // Order 0 or 1: nothing to shift.
    r.pstar = p.matrix;
    r.degenerate = true;
    return r;
  }
  r.degenerate = prof.groups.size() == 1;
  r.pstar = SymMatrix(n);
  if (mode == ShiftMode::low) {
    r.shift_value = prof.groups.back().value;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) r.pstar.set(i, j, p.matrix(i, j) - 2 * r.shift_value);
  } else {
    r.shift_value = prof.groups.front().value;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) r.pstar.set(i, j, 2 * r.shift_value - p.matrix(i, j));
  }
  return r;
}

int zeta(const Predistance& p, double group_tol_factor) {
  const int n = p.matrix.n();
  if (n == 0) return 0;
  auto prof = spectral_profile(bilinear_form(p.matrix), group_tol_factor);
  if (prof.groups.empty()) return 0;  // single vertex

  // Profile formula: n - 1 - multiplicity of the smallest group.
  const int by_profile = n - 1 - prof.groups.back().multiplicity;

  // Case analysis on the full spectrum, which adds the exact zero of the
  // all-ones direction to the profile. The zero merges into a profile group
  // when one sits within the grouping tolerance of 0.
  double radius = std::max(std::abs(prof.groups.front().value),
                           std::abs(prof.groups.back().value));
  const double tol = group_tol_factor * std::max(1.0, radius);
  std::vector<EigenGroup> full = prof.groups;  // descending
  bool merged = false;
  for (auto& grp : full)
    if (std::abs(grp.value) <= tol) {
      ++grp.multiplicity;
      merged = true;
      break;
    }
  if (!merged) {
    EigenGroup zero{0.0, 1};
    auto it = std::lower_bound(full.begin(), full.end(), zero,
                               [](const EigenGroup& a, const EigenGroup& b) {
                                 return a.value > b.value;
                               });
    full.insert(it, zero);
  }

  const auto& smallest = full.back();
  int by_cases;
  if (smallest.value < -tol) {
    by_cases = n - smallest.multiplicity - 1;
  } else if (smallest.multiplicity > 1) {
    by_cases = n - smallest.multiplicity;
  } else {
    // Smallest eigenvalue is the simple zero of the ones direction; use the
    // second smallest group.
    by_cases = n - full[full.size() - 2].multiplicity - 1;
  }
  if (by_cases != by_profile)
    throw std::logic_error("zeta case analysis disagrees with the profile formula (" +
                           std::to_string(by_cases) + " vs " + std::to_string(by_profile) + ")");
  return by_profile;
}

Embedding embed(const Predistance& p, ShiftMode mode, double group_tol_factor) {
  const int n = p.matrix.n();
  Embedding e;
  e.shift_mode = mode;
  e.source = p.kind;
  e.profile = spectral_profile(bilinear_form(p.matrix), group_tol_factor);
  auto reduced = reduce_predistance(p, mode, group_tol_factor);
  e.shift_value = reduced.shift_value;
  e.degenerate = reduced.degenerate;

  if (n <= 1) {
    e.points = Eigen::MatrixXd::Zero(n, 0);
    return e;
  }

  SymMatrix b = bilinear_form(reduced.pstar);
  Eigen::MatrixXd q = ones_complement_basis(n);
  Eigen::MatrixXd restricted = q.transpose() * b.mat() * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      0.5 * (restricted + restricted.transpose()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  Eigen::VectorXd vals = solver.eigenvalues();  // ascending
  const double tol = [&] {
    double radius = std::max(std::abs(vals[0]), std::abs(vals[vals.size() - 1]));
    return group_tol_factor * std::max(1.0, radius);
  }();
  if (vals[0] < -tol)
    throw std::runtime_error("reduced bilinear form has a negative eigenvalue beyond tolerance (" +
                             std::to_string(vals[0]) + ")");

  // Retain eigenvalues above tolerance, largest first.
  std::vector<int> kept;
  for (int i = static_cast<int>(vals.size()) - 1; i >= 0; --i)
    if (vals[i] > tol) kept.push_back(i);
  e.zeta = static_cast<int>(kept.size());
  e.points = Eigen::MatrixXd::Zero(n, e.zeta);
  for (int c = 0; c < e.zeta; ++c) {
    const int idx = kept[c];
    e.points.col(c) = q * solver.eigenvectors().col(idx) * std::sqrt(vals[idx]);
  }

  // Column ranges per eigenvalue group of the retained spectrum.
  int start = 0;
  for (int c = 1; c <= e.zeta; ++c) {
    if (c == e.zeta || vals[kept[c - 1]] - vals[kept[c]] > tol) {
      e.eigenspace_slices.emplace_back(start, c);
      start = c;
    }
  }
  return e;
}

SymMatrix squared_distance_matrix(const Eigen::MatrixXd& points) {
  const int n = static_cast<int>(points.rows());
  SymMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d.set(i, j, (points.row(i) - points.row(j)).squaredNorm());
  return d;
}

}  // namespace regembed
