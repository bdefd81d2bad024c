#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace regembed::testing {

std::vector<Permutation> naive_automorphisms(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.multiplicity(images[i], images[j]) != g.multiplicity(i, j)) {
          ok = false;
          break;
        }
    if (ok) result.push_back(Permutation{images});
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Permutation> naive_isometries(const Eigen::MatrixXd& points, double tol) {
  const int n = static_cast<int>(points.rows());
  Eigen::MatrixXd d2(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d2(i, j) = (points.row(i) - points.row(j)).squaredNorm();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(d2(images[i], images[j]) - d2(i, j)) > tol) {
          ok = false;
          break;
        }
    if (ok) result.push_back(Permutation{images});
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(result.begin(), result.end());
  return result;
}

JacobiEigen jacobi_eigensystem(Eigen::MatrixXd a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) < 1e-14 * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        Eigen::VectorXd col_p = a.col(p), col_q = a.col(q);
        a.col(p) = c * col_p - s * col_q;
        a.col(q) = s * col_p + c * col_q;
        Eigen::RowVectorXd row_p = a.row(p), row_q = a.row(q);
        a.row(p) = c * row_p - s * row_q;
        a.row(q) = s * row_p + c * row_q;
        a(p, q) = 0;
        a(q, p) = 0;
        Eigen::VectorXd r_p = r.col(p), r_q = r.col(q);
        r.col(p) = c * r_p - s * r_q;
        r.col(q) = s * r_p + c * r_q;
      }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
  JacobiEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    out.vectors.col(i) = r.col(order[i]);
  }
  return out;
}

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a) {
  return jacobi_eigensystem(std::move(a)).values;
}

std::vector<std::vector<int>> floyd_warshall_distances(const Multigraph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.multiplicity(i, j) > 0) d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] >= inf) d[i][j] = -1;
  return d;
}

}  // namespace regembed::testing
