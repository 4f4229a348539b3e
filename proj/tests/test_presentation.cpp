#include <doctest.h>

#include <random>
#include <string>

#include "cyclic/errors.hpp"
#include "cyclic/presentation.hpp"

using namespace cyclic;

TEST_SUITE("presentation") {
  TEST_CASE("relator form of the quaternion relation parses") {
    const Presentation p = parse_presentation("group Q8\ngens x y\nrel x^4\nrel y^4\nrel y*x*y^-1*x");
    CHECK(p.name == "Q8");
    CHECK(p.generator_count() == 2);
    CHECK(p.relators.size() == 3);
    CHECK(p.relators[2] == Word({{1, 1}, {0, 1}, {1, -1}, {0, 1}}));
  }

  TEST_CASE("conjugation sugar in a relation") {
    const Presentation p = parse_presentation("group G\ngens x y\nrel x^y = x");
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == Word({{1, -1}, {0, 1}, {1, 1}, {0, -1}}));
    CHECK(p.relators[0].size() == 4);
  }

  TEST_CASE("commutator subword expands to x^-1 y^-1 x y") {
    const Presentation p = parse_presentation("group G\ngens x y\nrel [x,y]");
    CHECK(p.relators[0] == Word({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
  }

  TEST_CASE("nested brackets, parentheses and metadata") {
    const Presentation p = parse_presentation(
        "# extraspecial\n"
        "group e27\n"
        "gens x y\n"
        "order 27\n"
        "prime 3\n"
        "family extraspecial_exp_p\n"
        "rel x^3\n"
        "rel (x*y)^3   # trailing comment\n"
        "rel [[x,y],x]\n");
    CHECK(p.meta.expected_order == 27u);
    CHECK(p.meta.prime == 3u);
    CHECK(p.meta.family == "extraspecial_exp_p");
    CHECK(p.relators[1].length() == 6);
    // [[x,y],x] = y^-1 x^-1 y x . x^-1 . x^-1 y^-1 x y . x, reduced
    CHECK(p.relators[2] == Word({{1, -1}, {0, -1}, {1, 1}, {0, -1}, {1, -1}, {0, 1}, {1, 1}, {0, 1}}));
  }

  TEST_CASE("malformed input raises ParseError with a position") {
    const auto fails_at = [](const std::string& text, std::size_t line) {
      try {
        parse_presentation(text);
      } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() >= 1);
        return;
      }
      FAIL("no ParseError for: " << text);
    };
    fails_at("gens x\nrel x", 1);
    fails_at("group G\nrel x", 2);
    fails_at("group G\ngens x\nrel x^", 3);
    fails_at("group G\ngens x\nrel y", 3);
    fails_at("group G\ngens x\nrel x^99999999999", 3);
    fails_at("group G\ngens x\nrel [x,x", 3);
    fails_at("group G\ngens x x\nrel x", 2);
    fails_at("group G\ngens x\nrel x\norder 3", 4);
    fails_at("group G\ngens x\nrel x$", 3);
    fails_at("group G\ngens x\n", 2);
  }

  TEST_CASE("serialize round-trips") {
    const Presentation p = parse_presentation(
        "group m27\ngens a b\norder 27\nprime 3\nfamily modular\nrel a^9\nrel b^3\nrel a^b = a^4\nrel a*a^-1\n");
    const Presentation q = parse_presentation(serialize(p));
    CHECK(q == p);
  }

  TEST_CASE("property: serialize then parse is the identity on random presentations") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> gen(0, 2);
    std::uniform_int_distribution<std::int64_t> exp(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
      Presentation p;
      p.name = "random" + std::to_string(trial);
      p.generators = {"a", "b", "c"};
      if (trial % 2) p.meta.expected_order = 1 + trial;
      for (int r = 0; r < 1 + trial % 4; ++r) {
        std::vector<Syllable> s;
        for (int i = 0; i < 1 + (trial + r) % 7; ++i) s.push_back({gen(rng), exp(rng)});
        p.relators.push_back(free_reduce(s));
      }
      CHECK(parse_presentation(serialize(p)) == p);
    }
  }
}
