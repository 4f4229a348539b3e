// Brute-force reference implementations used to cross-check the library.
// They work directly on permutation image arrays and share no code with
// the production algorithms beyond `compose`.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cyclic/group.hpp"
#include "cyclic/presentation.hpp"

namespace oracle {

using cyclic::Perm;

inline Perm perm_power(const Perm& a, std::uint64_t k) {
  Perm r = cyclic::identity_perm(a.size());
  for (std::uint64_t i = 0; i < k; ++i) r = cyclic::compose(r, a);
  return r;
}

inline std::uint64_t perm_order(const Perm& a) {
  const Perm id = cyclic::identity_perm(a.size());
  Perm x = a;
  std::uint64_t k = 1;
  while (x != id) {
    x = cyclic::compose(x, a);
    ++k;
  }
  return k;
}

// Closure by breadth-first multiplication on raw permutations.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{cyclic::identity_perm(degree)};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = cyclic::compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Cyclic subgroups as sets of permutations, keyed by size.
inline std::map<std::size_t, std::size_t> cyclic_subgroup_sizes(const cyclic::Group& g) {
  std::set<std::set<Perm>> subgroups;
  for (const auto& x : g.elements()) {
    std::set<Perm> h;
    const std::uint64_t o = perm_order(x);
    for (std::uint64_t k = 0; k < o; ++k) h.insert(perm_power(x, k));
    subgroups.insert(std::move(h));
  }
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& h : subgroups) ++by_size[h.size()];
  return by_size;
}

inline std::size_t cyclic_subgroup_total(const cyclic::Group& g) {
  std::size_t total = 0;
  for (const auto& [size, count] : cyclic_subgroup_sizes(g)) total += count;
  return total;
}

// Every subgroup generated by at most two elements, as sorted index sets.
// For the small groups used in tests this finds all subgroups of the sizes
// we query (every proper subgroup of a group of order <= 16 is 2-generated).
inline std::set<std::vector<cyclic::ElementIndex>> two_generated_subgroups(const cyclic::Group& g) {
  std::set<std::vector<cyclic::ElementIndex>> out;
  for (cyclic::ElementIndex a = 0; a < g.order(); ++a) {
    for (cyclic::ElementIndex b = a; b < g.order(); ++b) {
      std::set<Perm> h = closure({g.element(a), g.element(b)}, g.degree());
      std::vector<cyclic::ElementIndex> idx;
      for (const auto& x : h) idx.push_back(*g.find(x));
      std::sort(idx.begin(), idx.end());
      out.insert(std::move(idx));
    }
  }
  return out;
}

// All homomorphisms G -> Z/p, as value vectors indexed by element. A map is
// determined by the generator images; consistency is checked by walking
// the right Cayley graph from the identity.
inline std::vector<std::vector<std::uint64_t>> homs_to_cp(const cyclic::Group& g, std::uint64_t p) {
  const auto& gens = g.generators();
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> images(gens.size(), 0);
  while (true) {
    std::vector<std::int64_t> value(g.order(), -1);
    value[cyclic::Group::identity()] = 0;
    std::vector<cyclic::ElementIndex> stack{cyclic::Group::identity()};
    bool ok = true;
    while (!stack.empty() && ok) {
      const auto x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const auto y = g.multiply(x, gens[i]);
        const auto v = static_cast<std::int64_t>((value[x] + images[i]) % p);
        if (value[y] < 0) {
          value[y] = v;
          stack.push_back(y);
        } else if (value[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) out.emplace_back(value.begin(), value.end());
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == p) images[i++] = 0;
    if (i == images.size()) break;
  }
  return out;
}

// Kernels of the non-trivial homomorphisms to Z/p: the maximal subgroups
// of a p-group, deduplicated.
inline std::set<std::vector<cyclic::ElementIndex>> hom_kernels(const cyclic::Group& g, std::uint64_t p) {
  std::set<std::vector<cyclic::ElementIndex>> out;
  for (const auto& h : homs_to_cp(g, p)) {
    if (std::all_of(h.begin(), h.end(), [](std::uint64_t v) { return v == 0; })) continue;
    std::vector<cyclic::ElementIndex> ker;
    for (cyclic::ElementIndex x = 0; x < h.size(); ++x) {
      if (h[x] == 0) ker.push_back(x);
    }
    out.insert(std::move(ker));
  }
  return out;
}

// Evaluates a word on the generator images of a permutation group.
inline Perm evaluate(const cyclic::Word& w, const std::vector<Perm>& gens) {
  Perm r = cyclic::identity_perm(gens.front().size());
  for (const auto& s : w.syllables()) {
    const Perm& base = s.exponent > 0 ? gens[s.generator] : cyclic::invert(gens[s.generator]);
    const std::uint64_t k = static_cast<std::uint64_t>(s.exponent > 0 ? s.exponent : -s.exponent);
    for (std::uint64_t i = 0; i < k; ++i) r = cyclic::compose(r, base);
  }
  return r;
}

// Converts 1-based cycle notation to a 0-based image array.
inline Perm from_cycles(std::size_t degree, const std::vector<std::vector<cyclic::Point>>& cycles) {
  Perm p = cyclic::identity_perm(degree);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

}  // namespace oracle
