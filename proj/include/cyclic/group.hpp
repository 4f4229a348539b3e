#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace cyclic {

using Point = std::uint32_t;
using Perm = std::vector<Point>;  // image array: i -> perm[i]
using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Permutations act on the right: (a*b)[i] = b[a[i]], i.e. apply a first.
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);
Perm identity_perm(std::size_t degree);

// A concrete finite permutation group. Elements are held in lexicographic
// order of their image arrays, so the identity is always index 0 and
// element indices are deterministic. Immutable after construction; every
// query is const and safe to call concurrently.
class Group {
 public:
  // Smallest subgroup of Sym(degree) containing `gens`. Throws
  // ResourceLimitError when the closure would exceed `cap` elements and
  // DomainError when a generator is not a permutation of the given degree.
  static Group closure(std::size_t degree, std::span<const Perm> gens,
                       std::size_t cap = kDefaultClosureCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Perm& element(ElementIndex i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  static constexpr ElementIndex identity() noexcept { return 0; }
  const std::vector<ElementIndex>& generators() const noexcept { return generators_; }

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  ElementIndex power(ElementIndex a, std::int64_t k) const;
  ElementIndex commutator(ElementIndex a, ElementIndex b) const;
  std::uint64_t element_order(ElementIndex a) const { return orders_[a]; }
  const std::vector<std::uint64_t>& element_orders() const noexcept { return orders_; }

  std::optional<ElementIndex> find(const Perm& p) const;
  bool is_abelian() const;

 private:
  Group() = default;
  void build_lookup();
  std::uint64_t key_of_base_images(const Point* images) const;

  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<ElementIndex> generators_;
  std::vector<ElementIndex> inverses_;
  std::vector<std::uint64_t> orders_;
  // Points whose images determine an element uniquely, with a hash index
  // from the packed image tuple to the element.
  std::vector<Point> base_;
  std::unordered_map<std::uint64_t, ElementIndex> by_base_image_;
};

// A subgroup as a sorted set of element indices of its parent group.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<ElementIndex> sorted_elements);

  const std::vector<ElementIndex>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(ElementIndex x) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<ElementIndex> elements_;
};

struct PrimePower {
  std::uint64_t p = 0;
  unsigned n = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t m);

// (p, n) with order = p^n, or nullopt when the order is not a prime power
// (the trivial group included).
std::optional<PrimePower> prime_power_decomposition(std::uint64_t m);
std::optional<PrimePower> is_p_group(const Group& g);

std::uint64_t element_order(const Group& g, ElementIndex x);
std::uint64_t exponent(const Group& g);

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);
Subgroup generate(const Group& g, std::span<const ElementIndex> gens);
Subgroup normal_closure(const Group& g, std::span<const ElementIndex> gens);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

// Elements x with x^p = 1, identity included, in index order.
std::vector<ElementIndex> omega1_set(const Group& g, std::uint64_t p);
Subgroup omega1_subgroup(const Group& g, std::uint64_t p);
Subgroup derived_subgroup(const Group& g);
Subgroup center(const Group& g);

// Phi(G) = G' G^p for a p-group.
Subgroup frattini_subgroup(const Group& g, std::uint64_t p);

// All index-p subgroups of a p-group, obtained by lifting the hyperplanes
// of the elementary abelian quotient G/Phi(G). Ordered by the normalised
// linear functional defining each hyperplane.
std::vector<Subgroup> maximal_subgroups(const Group& g, std::uint64_t p);

// A x B acting on the disjoint union of the two point sets.
Group direct_product(const Group& a, const Group& b, std::size_t cap = kDefaultClosureCap);

// Builds a standalone group from a subgroup (same degree).
Group subgroup_as_group(const Group& g, const Subgroup& h);

}  // namespace cyclic
