#include <doctest.h>

#include <cmath>
#include <numbers>

#include "regembed/graph_io.hpp"
#include "regembed/errors.hpp"
#include "regembed/spectral.hpp"
#include "support/corpus.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace regembed;
using namespace regembed::testing;

namespace {

Predistance adjacency_pre(const Multigraph& g) {
  return build_predistance(g, PredistanceKind::adjacency);
}

// Flattens a profile into an eigenvalue list with multiplicities expanded.
std::vector<double> expanded(const SpectralProfile& prof) {
  std::vector<double> out;
  for (const EigenGroup& grp : prof.groups)
    out.insert(out.end(), static_cast<size_t>(grp.multiplicity), grp.value);
  return out;
}

}  // namespace

TEST_CASE("the bilinear form of a single edge is frozen") {
  Eigen::MatrixXd p(2, 2);
  p << 0, 1, 1, 0;
  SymMatrix l = bilinear_form(SymMatrix::from_symmetric(p));
  CHECK(l(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(l(0, 1) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(l(1, 1) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("the ones vector spans the kernel direction of every bilinear form") {
  for (const Multigraph& g : {petersen(), path(4), complete_bipartite(2, 3)}) {
    SymMatrix l = bilinear_form(adjacency_pre(g).matrix);
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(g.order());
    CHECK((l.mat() * ones).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, l.max_abs()));
  }
}

TEST_CASE("the ones-complement basis is orthonormal and sums to zero") {
  for (int n : {2, 3, 7, 25}) {
    Eigen::MatrixXd h = ones_complement_basis(n);
    REQUIRE(h.rows() == n);
    REQUIRE(h.cols() == n - 1);
    CHECK((h.transpose() * h - Eigen::MatrixXd::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <=
          1e-14);
    CHECK((Eigen::RowVectorXd::Ones(n) * h).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("profiles match the Jacobi oracle with the kernel direction removed") {
  std::vector<Multigraph> graphs = connected_graphs(6);
  graphs.push_back(petersen());
  for (const Multigraph& g : graphs) {
    SymMatrix l = bilinear_form(adjacency_pre(g).matrix);
    SpectralProfile prof = spectral_profile(l);
    CHECK(std::abs(prof.ones_eigenvalue) <= 1e-9);

    // The full spectrum of L is the profile plus one extra zero.
    std::vector<double> want = jacobi_eigenvalues(l.mat());
    std::vector<double> got = expanded(prof);
    got.push_back(0);
    std::sort(got.begin(), got.end(), std::greater<>());
    REQUIRE(got.size() == want.size());
    for (size_t k = 0; k < want.size(); ++k)
      CHECK(std::abs(got[k] - want[k]) <= 1e-9);
  }
}

TEST_CASE("closed-form profiles of small graphs") {
  // K2 adjacency: L has the single nonzero eigenvalue 1/2 on the complement.
  SpectralProfile k2 = spectral_profile(bilinear_form(adjacency_pre(complete(2)).matrix));
  REQUIRE(k2.groups.size() == 1);
  CHECK(k2.groups[0].value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(k2.groups[0].multiplicity == 1);

  // Zero matrix on 3 vertices: one group of two zeros.
  SpectralProfile zero = spectral_profile(bilinear_form(SymMatrix(3)));
  REQUIRE(zero.groups.size() == 1);
  CHECK(zero.groups[0].value == 0);
  CHECK(zero.groups[0].multiplicity == 2);

  // C5: adjacency eigenvalues on the complement are 2cos(2pi/5) and
  // 2cos(4pi/5), each twice; the form negates and halves them, so the golden
  // ratio values appear with the order reversed.
  SpectralProfile c5 = spectral_profile(bilinear_form(adjacency_pre(cycle(5)).matrix));
  const double pi = std::numbers::pi;
  REQUIRE(c5.groups.size() == 2);
  CHECK(c5.groups[0].value == doctest::Approx(-std::cos(4 * pi / 5)).epsilon(1e-12));
  CHECK(c5.groups[0].multiplicity == 2);
  CHECK(c5.groups[1].value == doctest::Approx(-std::cos(2 * pi / 5)).epsilon(1e-12));
  CHECK(c5.groups[1].multiplicity == 2);
  CHECK(c5.groups[0].value == doctest::Approx(0.809016994374947).epsilon(1e-12));
  CHECK(c5.groups[1].value == doctest::Approx(-0.309016994374947).epsilon(1e-12));

  // Petersen: adjacency spectrum 3, 1 (x5), -2 (x4) maps to 1 (x4), -1/2 (x5).
  SpectralProfile pp = spectral_profile(bilinear_form(adjacency_pre(petersen()).matrix));
  REQUIRE(pp.groups.size() == 2);
  CHECK(pp.groups[0].value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pp.groups[0].multiplicity == 4);
  CHECK(pp.groups[1].value == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(pp.groups[1].multiplicity == 5);
}

TEST_CASE("profile input must annihilate the ones vector") {
  // The identity does not: its restriction is fine but ones is an eigenvector
  // with eigenvalue 1, not 0.
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(spectral_profile(SymMatrix::from_symmetric(id)), ValidationError);
}

TEST_CASE("grouped spectrum reports the adjacency eigenvalues") {
  std::vector<EigenGroup> spec = grouped_spectrum(adjacency_matrix(petersen()));
  REQUIRE(spec.size() == 3);
  CHECK(spec[0].value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(spec[0].multiplicity == 1);
  CHECK(spec[1].value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec[1].multiplicity == 5);
  CHECK(spec[2].value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(spec[2].multiplicity == 4);
}

TEST_CASE("shifts produce positive semidefinite forms with predictable entries") {
  Multigraph c5 = cycle(5);
  Predistance p = adjacency_pre(c5);

  ReducedPredistance low = reduce_predistance(p, ShiftMode::low);
  CHECK_FALSE(low.degenerate);
  // lambda_r = -cos(2pi/5) is the smallest profile value; adjacent pairs end
  // up at 1 + 2 cos(2pi/5) = golden ratio, non-adjacent at golden ratio - 1.
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(low.pstar(0, 1) == doctest::Approx(phi).epsilon(1e-12));
  CHECK(low.pstar(0, 2) == doctest::Approx(phi - 1).epsilon(1e-12));
  CHECK(low.pstar(0, 1) / low.pstar(0, 2) == doctest::Approx(phi * phi).epsilon(1e-9));
  CHECK(low.shift_value == doctest::Approx(-std::cos(2 * std::numbers::pi / 5)).epsilon(1e-12));

  ReducedPredistance high = reduce_predistance(p, ShiftMode::high);
  CHECK_FALSE(high.degenerate);
  CHECK(high.pstar(0, 1) ==
        doctest::Approx(2 * -std::cos(4 * std::numbers::pi / 5) - 1).epsilon(1e-12));

  for (ShiftMode mode : {ShiftMode::low, ShiftMode::high}) {
    std::vector<double> eig =
        jacobi_eigenvalues(bilinear_form(reduce_predistance(p, mode).pstar).mat());
    for (double v : eig) CHECK(v >= -1e-9);
  }
}

TEST_CASE("single-group profiles collapse to a degenerate reduction") {
  // K4 adjacency has the one-group profile 1/2 (x3); both shifts wipe it out.
  Predistance p = adjacency_pre(complete(4));
  for (ShiftMode mode : {ShiftMode::low, ShiftMode::high}) {
    ReducedPredistance r = reduce_predistance(p, mode);
    CHECK(r.degenerate);
    CHECK(r.pstar.max_abs() <= 1e-12);
  }
  CHECK(reduce_predistance(adjacency_pre(Multigraph(1)), ShiftMode::low).degenerate);
}

TEST_CASE("the dimension count subtracts the smallest group") {
  CHECK(zeta(adjacency_pre(petersen())) == 4);
  CHECK(zeta(adjacency_pre(cycle(6))) == 3);
  CHECK(zeta(adjacency_pre(cycle(5))) == 2);
  CHECK(zeta(adjacency_pre(complete(4))) == 0);
  CHECK(zeta(build_predistance(cycle(5), PredistanceKind::graph_distance)) == 2);

  // Against the definition, on a corpus slice: n - 1 - smallest multiplicity.
  for (const Multigraph& g : connected_graphs(5)) {
    SpectralProfile prof = spectral_profile(bilinear_form(adjacency_pre(g).matrix));
    int m_r = prof.groups.back().multiplicity;
    CHECK(zeta(adjacency_pre(g)) == g.order() - 1 - m_r);
  }
}

TEST_CASE("embeddings reproduce the shifted predistance as squared distances") {
  std::vector<Multigraph> graphs = connected_graphs(5);
  graphs.push_back(petersen());
  graphs.push_back(complete_bipartite(3, 3));
  for (const Multigraph& g : graphs) {
    Predistance p = adjacency_pre(g);
    for (ShiftMode mode : {ShiftMode::low, ShiftMode::high}) {
      CAPTURE(serialize_multigraph(g, GraphFormat::edge_list));
      CAPTURE(to_string(mode));
      Embedding e = embed(p, mode);
      ReducedPredistance r = reduce_predistance(p, mode);
      if (e.degenerate) {
        CHECK(e.points.cols() == 0);
        continue;
      }
      SymMatrix d2 = squared_distance_matrix(e.points);
      double scale = std::max(1.0, r.pstar.max_abs());
      for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
          CHECK(std::abs(d2(i, j) - r.pstar(i, j)) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("embedding columns are orthogonal and sliced by eigenvalue group") {
  Embedding e = embed(adjacency_pre(petersen()), ShiftMode::low);
  CHECK(e.zeta == 4);
  CHECK(e.points.rows() == 10);
  CHECK(e.points.cols() == 4);
  REQUIRE(e.eigenspace_slices.size() == 1);
  CHECK(e.eigenspace_slices[0] == std::pair<int, int>{0, 4});

  // Columns of a spectral embedding are orthogonal: the Gram matrix
  // points^T points is diagonal.
  Eigen::MatrixXd gram = e.points.transpose() * e.points;
  for (int a = 0; a < gram.rows(); ++a)
    for (int b = 0; b < gram.cols(); ++b)
      if (a != b) CHECK(std::abs(gram(a, b)) <= 1e-9 * std::max(1.0, gram.cwiseAbs().maxCoeff()));

  Embedding high = embed(adjacency_pre(petersen()), ShiftMode::high);
  CHECK(high.zeta == 5);
  CHECK(high.shift_mode == ShiftMode::high);

  // A two-group survivor: C6 low keeps a simple top group above a double.
  Embedding c6 = embed(adjacency_pre(cycle(6)), ShiftMode::low);
  CHECK(c6.zeta == 3);
  REQUIRE(c6.eigenspace_slices.size() == 2);
  CHECK(c6.eigenspace_slices[0] == std::pair<int, int>{0, 1});
  CHECK(c6.eigenspace_slices[1] == std::pair<int, int>{1, 3});
}

TEST_CASE("the eigensolver residual stays tiny on reduced forms") {
  for (const Multigraph& g : {petersen(), cycle(7), complete_bipartite(2, 5)}) {
    SymMatrix l = bilinear_form(reduce_predistance(adjacency_pre(g), ShiftMode::low).pstar);
    JacobiEigen sys = jacobi_eigensystem(l.mat());
    Eigen::VectorXd vals =
        Eigen::Map<const Eigen::VectorXd>(sys.values.data(), static_cast<long>(sys.values.size()));
    Eigen::MatrixXd recon = sys.vectors * vals.asDiagonal() * sys.vectors.transpose();
    CHECK((recon - l.mat()).cwiseAbs().maxCoeff() <=
          1e-10 * std::max(1.0, l.mat().cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("the gram factorization is unique up to column sign") {
  // Re-deriving points from an independently diagonalized Gram matrix gives
  // the same squared distances.
  Embedding e = embed(adjacency_pre(cycle(5)), ShiftMode::low);
  Eigen::MatrixXd gram = e.points * e.points.transpose();
  JacobiEigen sys = jacobi_eigensystem(gram);
  Eigen::MatrixXd alt(gram.rows(), e.points.cols());
  for (int k = 0; k < e.points.cols(); ++k)
    alt.col(k) = sys.vectors.col(k) * std::sqrt(std::max(0.0, sys.values[static_cast<size_t>(k)]));
  SymMatrix d_e = squared_distance_matrix(e.points);
  SymMatrix d_a = squared_distance_matrix(alt);
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.rows(); ++j)
      CHECK(std::abs(d_a(i, j) - d_e(i, j)) <= 1e-9);
}

TEST_CASE("low shift subtracts the shift from every profile value") {
  // Shifting by the smallest eigenvalue moves each profile group of P to
  // value - lambda_r in the profile of P*; the smallest group lands on zero.
  Predistance p = adjacency_pre(cycle(6));
  SpectralProfile before = spectral_profile(bilinear_form(p.matrix));
  ReducedPredistance r = reduce_predistance(p, ShiftMode::low);
  SpectralProfile after = spectral_profile(bilinear_form(r.pstar));
  REQUIRE(after.groups.size() == before.groups.size());
  for (size_t k = 0; k < before.groups.size(); ++k) {
    CHECK(after.groups[k].multiplicity == before.groups[k].multiplicity);
    CHECK(std::abs(after.groups[k].value - (before.groups[k].value - r.shift_value)) <= 1e-10);
  }
  CHECK(std::abs(after.groups.back().value) <= 1e-10);
}
