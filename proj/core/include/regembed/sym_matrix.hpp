#pragma once

#include <Eigen/Dense>

namespace regembed {

// Dense real symmetric matrix. Entry (i,j) and (j,i) are identical by
// construction, not just up to rounding.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : m_(Eigen::MatrixXd::Zero(n, n)) {}

  // Averages m with its transpose; the two mirrored entries get the same value.
  static SymMatrix symmetrized(const Eigen::MatrixXd& m);
  // Requires m to be exactly symmetric, throws ValidationError otherwise.
  static SymMatrix from_symmetric(const Eigen::MatrixXd& m);

  int n() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  const Eigen::MatrixXd& mat() const { return m_; }
  double max_abs() const;

 private:
  Eigen::MatrixXd m_;
};

}  // namespace regembed
