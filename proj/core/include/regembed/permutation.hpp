#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace regembed {

// Permutation of 0..n-1 in image form: images[i] is where i goes.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }
  bool is_valid() const;

  // (a.compose(b))(i) == a(b(i)): b is applied first.
  Permutation compose(const Permutation& b) const;
  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;
};

// A finite permutation group held as its full, sorted element list.
// Construction proves the element set is exactly the subgroup generated by
// it: generators are extracted greedily and the identity's orbit under right
// multiplication must reproduce the set without ever leaving it. That
// implies closure under composition and inverse.
class PermGroup {
 public:
  static PermGroup from_elements(std::vector<Permutation> elems);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  bool same_elements(const PermGroup& other) const { return elements_ == other.elements_; }

 private:
  PermGroup() = default;
  int degree_ = 0;
  std::vector<Permutation> elements_;  // sorted, unique
};

}  // namespace regembed
