#include "regembed/permutation.hpp"

#include <algorithm>

#include "regembed/errors.hpp"

namespace regembed {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= degree() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& b) const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) r.images[i] = images[b.images[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) r.images[images[i]] = i;
  return r;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elems) {
  if (elems.empty()) throw ValidationError("permutation group needs at least the identity");
  const int n = elems.front().degree();
  for (const auto& p : elems) {
    if (p.degree() != n) throw ValidationError("permutation group elements have mixed degrees");
    if (!p.is_valid()) throw ValidationError("element is not a permutation");
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  auto member = [&elems](const Permutation& p) {
    return std::binary_search(elems.begin(), elems.end(), p);
  };

  const Permutation id = Permutation::identity(n);
  if (!member(id)) throw ValidationError("permutation group lacks the identity");
  for (const auto& p : elems)
    if (!member(p.inverse())) throw ValidationError("permutation group is not inverse-closed");

  // Generated-closure check.
  std::vector<Permutation> generators;
  std::vector<Permutation> known{id};
  std::vector<Permutation> sorted_known{id};
  auto known_member = [&sorted_known](const Permutation& p) {
    return std::binary_search(sorted_known.begin(), sorted_known.end(), p);
  };
  auto add_known = [&](const Permutation& p) {
    known.push_back(p);
    sorted_known.insert(std::lower_bound(sorted_known.begin(), sorted_known.end(), p), p);
  };
  while (known.size() < elems.size()) {
    // Pick the smallest element not yet reached as a new generator, then
    // re-expand the identity's orbit under all generators so far. The scan
    // index chases the growing tail, so every reached element is multiplied
    // by every generator.
    const Permutation* next = nullptr;
    for (const auto& p : elems)
      if (!known_member(p)) {
        next = &p;
        break;
      }
    generators.push_back(*next);
    for (size_t i = 0; i < known.size(); ++i) {
      for (const auto& gen : generators) {
        Permutation prod = known[i].compose(gen);
        if (!member(prod)) throw ValidationError("permutation set is not closed under composition");
        if (!known_member(prod)) add_known(prod);
      }
    }
  }

  PermGroup g;
  g.degree_ = n;
  g.elements_ = std::move(elems);
  return g;
}

PermGroup PermGroup::trivial(int degree) {
  return from_elements({Permutation::identity(degree)});
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

}  // namespace regembed
