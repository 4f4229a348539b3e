#include <doctest.h>

#include "cyclic/catalog.hpp"
#include "cyclic/census.hpp"
#include "cyclic/errors.hpp"

using namespace cyclic;

TEST_SUITE("catalog") {
  TEST_CASE("build") {
    const Group m16 = build(make_spec(Family::modular, 2, 4));
    CHECK(m16.order() == 16);
    CHECK(exponent(m16) == 8);
    const Group e27 = build(make_spec(Family::extraspecial_exp_p, 3, 3));
    CHECK(e27.order() == 27);
    CHECK(exponent(e27) == 3);
    CHECK(build(make_spec(Family::wreath_cp_cp, 3, 4)).order() == 81);
    CHECK(build(make_product({make_spec(Family::modular, 3, 3), make_spec(Family::cyclic, 3, 1)})).order() == 81);
  }

  TEST_CASE("closed forms") {
    CHECK(cc_closed_form(make_spec(Family::quasidihedral, 2, 4)) == 10);
    CHECK(cc_closed_form(make_spec(Family::modular, 3, 3)) == 8);
    CHECK(cc_closed_form(make_spec(Family::cyclic, 7, 3)) == 4);
    CHECK(cc_closed_form(make_spec(Family::dihedral, 2, 4)) == 12);
    CHECK(cc_closed_form(make_spec(Family::quaternion, 2, 3)) == 5);
    CHECK(cc_closed_form(make_spec(Family::modular, 5, 3)) == 12);
    CHECK(cc_closed_form(make_spec(Family::elem_abelian, 3, 3)) == 14);
    CHECK_THROWS_AS(cc_closed_form(make_spec(Family::wreath_cp_cp, 3, 4)), DomainError);
    CHECK_THROWS_AS(cc_closed_form(make_spec(Family::extraspecial_exp_p2, 3, 3)), DomainError);
  }

  TEST_CASE("closed forms match computed censuses across families") {
    for (unsigned n = 3; n <= 6; ++n) {
      for (const auto f : {Family::dihedral, Family::quaternion, Family::quasidihedral, Family::modular}) {
        if (f == Family::quasidihedral && n < 4) continue;
        if (f == Family::modular && n < 4) continue;
        const FamilySpec s = make_spec(f, 2, n);
        CAPTURE(to_string(s));
        CHECK(census_by_sum(build(s)).total == cc_closed_form(s));
      }
    }
  }

  TEST_CASE("second-maximum bound") {
    CHECK(second_max_census_bound(3, 4) == 23);
    CHECK(second_max_census_bound(3, 3) == 8);
    CHECK(second_max_census_bound(5, 4) == 57);
    CHECK_THROWS_AS(second_max_census_bound(2, 4), DomainError);
    CHECK_THROWS_AS(second_max_census_bound(3, 2), DomainError);
  }

  TEST_CASE("census bound from c1") {
    CHECK(census_bound_from_c1(2, 3, 0) == Rational(9, 2));
    // M(27) x C3: c1 = 13 gives the equality value 23.
    CHECK(census_bound_from_c1(3, 4, 13) == Rational(23));
  }

  TEST_CASE("c1 caps") {
    CHECK(c1_bound_proper_omega(3, 4) == 13);
    CHECK(c1_bound_proper_omega(2, 5) == 15);
    CHECK(c1_bound_proper_omega(5, 3) == 6);
    CHECK(p3_c1_bound(3) == 10);
    CHECK(p3_c1_bound(5) == 94);
    CHECK(p3_census_bound(4) == Rational(35));
    CHECK(p3_census_bound(5) == Rational(104));
    CHECK(p3_census_bound(3) == Rational(12));
    CHECK_THROWS_AS(p3_c1_bound(2), DomainError);
  }

  TEST_CASE("family spec parsing") {
    CHECK(parse_family_spec("modular:p=2,n=4") == make_spec(Family::modular, 2, 4));
    CHECK(parse_family_spec("dihedral:n=5") == make_spec(Family::dihedral, 2, 5));
    CHECK(parse_family_spec("extraspecial_exp_p:p=3") == make_spec(Family::extraspecial_exp_p, 3, 3));
    CHECK(parse_family_spec("wreath_cp_cp:p=3") == make_spec(Family::wreath_cp_cp, 3, 4));
    const FamilySpec prod = parse_family_spec("product:modular:p=3,n=3;elem_abelian:p=3,n=1");
    CHECK(prod.family == Family::direct_product);
    CHECK(prod.p == 3);
    CHECK(prod.n == 4);
    CHECK(parse_family_spec(to_string(prod)) == prod);
    for (const char* bad : {"nosuch:p=2,n=3", "modular:n=4", "modular:p=4,n=4", "modular:p=2,n=3",
                            "quasidihedral:n=3", "extraspecial_exp_p:p=2", "wreath_cp_cp:p=3,n=5",
                            "product:cyclic:p=2,n=2;cyclic:p=3,n=1", "cyclic:p=2,n=x", "cyclic:p=2,q=3"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_family_spec(bad), DomainError);
    }
  }

  TEST_CASE("family presentations carry metadata") {
    const Presentation q = family_presentation(make_spec(Family::quaternion, 2, 4));
    CHECK(q.meta.expected_order == 16u);
    CHECK(q.meta.prime == 2u);
    CHECK(q.meta.family == "quaternion");
    CHECK_THROWS_AS(family_presentation(make_product({make_spec(Family::cyclic, 2, 1), make_spec(Family::cyclic, 2, 1)})),
                    DomainError);
  }
}
