#include "regembed/isometry.hpp"

#include <algorithm>
#include <string>

#include "regembed/errors.hpp"
#include "regembed/twin_reduce.hpp"

namespace regembed {

namespace {

struct IsoSearch {
  const SymMatrix& dist;
  double tol;
  std::uint64_t cap;
  std::vector<std::vector<double>> profile;  // sorted distance row per point
  std::vector<int> image;
  std::vector<bool> used;
  std::vector<Permutation> found;

  void run() {
    const int n = dist.n();
    profile.assign(n, {});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (j != i) profile[i].push_back(dist(i, j));
      std::sort(profile[i].begin(), profile[i].end());
    }
    image.assign(n, -1);
    used.assign(n, false);
    extend(0);
  }

  // Sorted-profile comparison with slack: a strict mismatch proves the two
  // points cannot correspond; borderline cases fall through to the exact
  // pairwise checks below.
  bool profiles_compatible(int a, int b) const {
    for (size_t k = 0; k < profile[a].size(); ++k)
      if (std::abs(profile[a][k] - profile[b][k]) > 8 * tol) return false;
    return true;
  }

  void extend(int pos) {
    const int n = dist.n();
    if (pos == n) {
      Permutation p;
      p.images = image;
      found.push_back(std::move(p));
      if (found.size() > cap)
        throw SizeCapError("distance-preserving permutation count exceeds cap " +
                           std::to_string(cap));
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (used[u] || !profiles_compatible(pos, u)) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q)
        if (std::abs(dist(pos, q) - dist(u, image[q])) > tol) ok = false;
      if (!ok) continue;
      image[pos] = u;
      used[u] = true;
      extend(pos + 1);
      image[pos] = -1;
      used[u] = false;
    }
  }
};

}  // namespace

PermGroup distance_preserving_permutations(const Eigen::MatrixXd& points,
                                           const IsometryOptions& opts) {
  const int n = static_cast<int>(points.rows());
  if (n > opts.max_n)
    throw SizeCapError("point count " + std::to_string(n) +
                       " exceeds isometry enumeration cap " + std::to_string(opts.max_n));
  SymMatrix dist = squared_distance_matrix(points);
  double tol = opts.tol_factor * dist.max_abs();
  IsoSearch search{dist, tol, opts.order_cap, {}, {}, {}, {}};
  search.run();
  return PermGroup::from_elements(std::move(search.found));
}

RegularityCertificate verify_regular(const Multigraph& g, const Predistance& p,
                                     const Embedding& emb, const IsometryOptions& opts) {
  if (!is_irreducible(g))
    throw ValidationError("graph is reducible (has non-trivial twin classes); "
                          "regularity certificates require an irreducible graph");
  if (emb.points.rows() != g.order())
    throw ValidationError("embedding point count does not match graph order");

  RegularityCertificate cert;

  auto aut = automorphisms(g, AutomorphismOptions{opts.max_n, opts.order_cap});
  cert.aut_order = aut.order();

  auto iso = distance_preserving_permutations(emb.points, opts);
  cert.isometry_perm_order = iso.order();

  cert.groups_equal = aut.same_elements(iso);
  if (!cert.groups_equal) {
    for (const auto& perm : iso.elements())
      if (!aut.contains(perm)) {
        cert.witnesses.group_mismatch = perm;
        cert.witnesses.group_mismatch_side = "isometry_only";
        break;
      }
    if (!cert.witnesses.group_mismatch)
      for (const auto& perm : aut.elements())
        if (!iso.contains(perm)) {
          cert.witnesses.group_mismatch = perm;
          cert.witnesses.group_mismatch_side = "automorphism_only";
          break;
        }
  }

  // Injectivity within the isometry tolerance.
  SymMatrix dist = squared_distance_matrix(emb.points);
  double tol = opts.tol_factor * dist.max_abs();
  cert.injective = true;
  for (int i = 0; i < g.order() && cert.injective; ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (dist(i, j) <= tol) {
        cert.injective = false;
        cert.witnesses.coincident_points = {i, j};
        break;
      }

  // Spanning: the points span all retained dimensions.
  if (emb.zeta == 0) {
    cert.spans = true;
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(emb.points);
    double threshold = 1e-9 * std::max(1.0, svd.singularValues()[0]);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > threshold) ++rank;
    cert.spans = rank == emb.zeta;
  }

  auto commuting = commuting_counterexample(p.matrix, aut);
  cert.commuting = !commuting.has_value();
  cert.witnesses.commuting = commuting;

  auto recon = check_reconstructing(p, g);
  cert.reconstructing = recon.ok;
  if (recon.witness)
    cert.witnesses.reconstructing = {recon.witness->i + 1, recon.witness->j + 1,
                                     recon.witness->i2 + 1, recon.witness->j2 + 1};

  return cert;
}

}  // namespace regembed
