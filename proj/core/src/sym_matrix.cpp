#include "regembed/sym_matrix.hpp"

#include "regembed/errors.hpp"

namespace regembed {

SymMatrix SymMatrix::symmetrized(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ValidationError("symmetrized: matrix is not square");
  SymMatrix s(static_cast<int>(m.rows()));
  for (int i = 0; i < s.n(); ++i)
    for (int j = i; j < s.n(); ++j) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  return s;
}

SymMatrix SymMatrix::from_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ValidationError("from_symmetric: matrix is not square");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw ValidationError("from_symmetric: matrix is not symmetric");
  SymMatrix s(static_cast<int>(m.rows()));
  s.m_ = m;
  return s;
}

double SymMatrix::max_abs() const {
  if (m_.size() == 0) return 0.0;
  return m_.cwiseAbs().maxCoeff();
}

}  // namespace regembed
