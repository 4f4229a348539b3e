#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/census.hpp"
#include "cyclic/coset_enum.hpp"
#include "cyclic/group.hpp"
#include "cyclic/presentation.hpp"

namespace cyclic {

enum class Family {
  cyclic,               // C_{p^n}
  elem_abelian,         // C_p^n
  cp_x_cpn1,            // C_p x C_{p^{n-1}}
  modular,              // M(p^n)
  dihedral,             // D_{2^n}
  quaternion,           // Q_{2^n}
  quasidihedral,        // QD_{2^n}
  extraspecial_exp_p,   // E(p^3), odd p
  extraspecial_exp_p2,  // M(p^3), odd p
  wreath_cp_cp,         // C_p wr C_p, order p^{p+1}
  direct_product,
};

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

// A named group family instance. Direct products list their factors; p and
// n are then the common prime and the summed exponent.
struct FamilySpec {
  Family family = Family::cyclic;
  std::uint64_t p = 2;
  unsigned n = 1;
  std::vector<FamilySpec> factors;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec make_spec(Family f, std::uint64_t p, unsigned n);
FamilySpec make_product(std::vector<FamilySpec> factors);

// Throws DomainError when the family constraints are violated.
void validate(const FamilySpec& spec);

// Parses the CLI form: `modular:p=3,n=4`, `dihedral:n=5` (p defaults to 2
// for the 2-group families, n to 3 for the extraspecial families and to
// p+1 for wreath products), `product:modular:p=3,n=3;elem_abelian:p=3,n=1`.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Presentation of a non-product family (DomainError for products).
Presentation family_presentation(const FamilySpec& spec);

// Enumerates the family presentation over the trivial subgroup; products
// are assembled with direct_product. |result| = p^n is asserted.
Group build(const FamilySpec& spec, std::size_t max_cosets = kDefaultMaxCosets);

// Known number of cyclic subgroups for the families that have one:
// cyclic n+1, elem_abelian 1+(p^n-1)/(p-1), cp_x_cpn1 and modular (n-1)p+2,
// dihedral 2^{n-1}+n, quaternion 2^{n-2}+n, quasidihedral 3*2^{n-3}+n.
// DomainError for every other family.
std::uint64_t cc_closed_form(const FamilySpec& spec);

// Largest |C(G)| for odd p, exp(G) != p and Omega_1(G) != G:
// 2p^{n-2} + p^{n-3} + ... + p + 2.
std::uint64_t second_max_census_bound(std::uint64_t p, unsigned n);

// Upper bound on |C(G)| from c_1(G) when exp(G) >= p^2:
// (p^n + p^2 - p - 1 + (p-1)^2 c_1) / (p^2 - p). Tight iff exp(G) = p^2.
Rational census_bound_from_c1(std::uint64_t p, unsigned n, std::uint64_t c1);

// (p^{n-1} - 1)/(p - 1): the c_1 cap when Omega_1(G) is proper.
std::uint64_t c1_bound_proper_omega(std::uint64_t p, unsigned n);

// p = 3 caps: c_1 <= (7*3^{n-2} - 1)/2 and |C(G)| <= (23*3^{n-3} + 1)/2.
// DomainError for n < 3.
std::uint64_t p3_c1_bound(unsigned n);
Rational p3_census_bound(unsigned n);

std::uint64_t ipow(std::uint64_t base, unsigned e);

}  // namespace cyclic
