#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cyclic/group.hpp"

namespace cyclic {

// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

// "num/den", denominator always written (e.g. "1/1").
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Cyclic-subgroup census of a group of order p^n.
struct CyclicCensus {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<std::uint64_t> c;  // c[k] = number of cyclic subgroups of order p^k, k = 0..n
  std::uint64_t total = 0;       // |C(G)|
  Rational alpha;                // |C(G)| / |G|
  unsigned exponent_k = 0;       // largest k with c[k] > 0, so exp(G) = p^exponent_k

  std::uint64_t c1() const { return c.size() > 1 ? c[1] : 0; }

  friend bool operator==(const CyclicCensus&, const CyclicCensus&) = default;
};

std::uint64_t euler_phi_prime_power(std::uint64_t p, unsigned k);
std::uint64_t euler_phi(std::uint64_t m);
std::uint64_t divisor_count(std::uint64_t m);

// Sum of 1/phi(o(x)) over the given elements.
Rational totient_reciprocal_sum(const Group& g, std::span<const ElementIndex> elements);

// |C(G)| for any finite group, from the totient sum over all elements.
std::uint64_t cyclic_subgroup_count(const Group& g);

// Counts elements by order and divides by phi(p^k); the total comes from
// the totient sum in exact arithmetic. Both divisions are asserted exact.
// Throws DomainError unless G is a p-group of order > 1.
CyclicCensus census_by_sum(const Group& g);

// Generates <x> for every element, deduplicates the element-index sets and
// counts the distinct subgroups by size. Shares no code with
// census_by_sum beyond the group multiplication.
CyclicCensus census_by_enumeration(const Group& g);

Rational alpha(const Group& g);

}  // namespace cyclic
