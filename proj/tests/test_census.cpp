#include <doctest.h>

#include <vector>

#include "cyclic/catalog.hpp"
#include "cyclic/census.hpp"
#include "cyclic/errors.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

Group fam(Family f, std::uint64_t p, unsigned n) { return build(make_spec(f, p, n)); }

Group wreath_degree9() {
  const std::vector<Perm> gens{oracle::from_cycles(9, {{1, 2, 3}}),
                               oracle::from_cycles(9, {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}})};
  return Group::closure(9, gens);
}

void check_against_oracle(const Group& g) {
  const CyclicCensus s = census_by_sum(g);
  const CyclicCensus e = census_by_enumeration(g);
  CHECK(s == e);
  const auto sizes = oracle::cyclic_subgroup_sizes(g);
  for (unsigned k = 0; k < s.c.size(); ++k) {
    const auto it = sizes.find(ipow(s.p, k));
    CHECK(s.c[k] == (it == sizes.end() ? 0 : it->second));
  }
  CHECK(s.total == oracle::cyclic_subgroup_total(g));
  CHECK(s.total == cyclic_subgroup_count(g));
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("euler phi") {
    CHECK(euler_phi_prime_power(2, 0) == 1);
    CHECK(euler_phi_prime_power(2, 3) == 4);
    CHECK(euler_phi_prime_power(3, 2) == 6);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(36) == 12);
    CHECK(euler_phi(97) == 96);
  }

  TEST_CASE("divisor count") {
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(81) == 5);
    CHECK(divisor_count(625) == 5);
    CHECK(divisor_count(12) == 6);
    CHECK_THROWS_AS(divisor_count(0), DomainError);
  }

  TEST_CASE("census by the totient sum") {
    const CyclicCensus q8 = census_by_sum(fam(Family::quaternion, 2, 3));
    CHECK(q8.total == 5);
    CHECK(q8.c == std::vector<std::uint64_t>{1, 1, 3, 0});
    const CyclicCensus c27 = census_by_sum(fam(Family::cyclic, 3, 3));
    CHECK(c27.total == 4);
    CHECK(c27.c == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(c27.exponent_k == 3);
    CHECK(census_by_sum(wreath_degree9()).total == 29);
  }

  TEST_CASE("census by enumeration") {
    CHECK(census_by_enumeration(fam(Family::dihedral, 2, 3)).total == 7);
    const Group m27c3 = direct_product(fam(Family::modular, 3, 3), fam(Family::cyclic, 3, 1));
    CHECK(census_by_enumeration(m27c3).total == 23);
  }

  TEST_CASE("alpha") {
    CHECK(alpha(fam(Family::elem_abelian, 2, 3)) == Rational(1));
    CHECK(alpha(fam(Family::modular, 2, 4)) == Rational(1, 2));
    CHECK(alpha(fam(Family::cyclic, 3, 4)) == Rational(5, 81));
  }

  TEST_CASE("both census routes agree with the brute-force oracle") {
    for (const auto& spec :
         {make_spec(Family::dihedral, 2, 4), make_spec(Family::quaternion, 2, 4), make_spec(Family::quasidihedral, 2, 5),
          make_spec(Family::modular, 3, 4), make_spec(Family::extraspecial_exp_p, 5, 3),
          make_spec(Family::extraspecial_exp_p2, 3, 3), make_spec(Family::wreath_cp_cp, 3, 4),
          make_product({make_spec(Family::dihedral, 2, 3), make_spec(Family::cyclic, 2, 2)})}) {
      CAPTURE(to_string(spec));
      check_against_oracle(build(spec));
    }
    check_against_oracle(wreath_degree9());
  }

  TEST_CASE("partition identity sum c_k phi(p^k) = |G|") {
    for (const auto& spec : {make_spec(Family::quasidihedral, 2, 6), make_spec(Family::cp_x_cpn1, 5, 4),
                             make_spec(Family::wreath_cp_cp, 3, 4)}) {
      const CyclicCensus c = census_by_sum(build(spec));
      std::uint64_t sum = 0;
      for (unsigned k = 0; k < c.c.size(); ++k) sum += c.c[k] * euler_phi_prime_power(c.p, k);
      CHECK(sum == ipow(spec.p, spec.n));
    }
  }

  TEST_CASE("census needs a p-group") {
    const Group s3 = Group::closure(3, std::vector<Perm>{Perm{1, 2, 0}, Perm{1, 0, 2}});
    CHECK_THROWS_AS(census_by_sum(s3), DomainError);
    CHECK(cyclic_subgroup_count(s3) == 5);  // 1, three C2, one C3
  }

  TEST_CASE("rational serialisation") {
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(4)) == "4/1");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("35/81") == Rational(35, 81));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational(to_string(Rational(104, 243))) == Rational(104, 243));
  }
}
