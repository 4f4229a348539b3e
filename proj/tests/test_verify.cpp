#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "cyclic/corpus.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/report.hpp"
#include "cyclic/verify.hpp"

using namespace cyclic;

namespace {

const Corpus& shipped() {
  static const Corpus corpus = load_corpus(CYCLIC_CORPUS_DIR);
  return corpus;
}

const CheckResult* find(const std::vector<CheckResult>& rs, const std::string& id, const std::string& subject) {
  for (const auto& r : rs) {
    if (r.check_id == id && r.subject == subject) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("closed-form grid covers the required families") {
    const auto grid = closed_form_grid(5, 5);
    auto has = [&](Family f, std::uint64_t p, unsigned n) {
      for (const auto& s : grid) {
        if (s.family == f && s.p == p && s.n == n) return true;
      }
      return false;
    };
    for (unsigned n = 3; n <= 7; ++n) {
      CHECK(has(Family::dihedral, 2, n));
      CHECK(has(Family::quaternion, 2, n));
      CHECK(has(Family::quasidihedral, 2, n) == (n >= 4));
    }
    for (std::uint64_t p : {2u, 3u, 5u}) {
      for (unsigned n = 3; n <= 5; ++n) {
        CHECK(has(Family::cp_x_cpn1, p, n));
        CHECK(has(Family::modular, p, n) == (p != 2 || n >= 4));
      }
    }
    const auto results = verify_closed_forms(grid);
    CHECK(results.size() == grid.size());
    for (const auto& r : results) CHECK(r.status == CheckStatus::pass);
    const CheckResult* d16 = find(results, "closed-form", "dihedral:p=2,n=4");
    REQUIRE(d16);
    CHECK(d16->expected == "12");
  }

  TEST_CASE("second minimum") {
    const auto rs = verify_second_minimum(shipped());
    const CheckResult* o8 = find(rs, "second-min", "order-8");
    REQUIRE(o8);
    CHECK(o8->status == CheckStatus::pass);
    CHECK(o8->actual == "alpha=5/8 at {q8}");
    const CheckResult* o16 = find(rs, "second-min", "order-16");
    REQUIRE(o16);
    CHECK(o16->actual == "alpha=1/2 at {c2xc8,m16,q16}");
    const CheckResult* o27 = find(rs, "second-min", "order-27");
    REQUIRE(o27);
    CHECK(o27->actual == "alpha=8/27 at {c3xc9,m27}");
    CHECK(find(rs, "second-min", "order-81 [restricted-corpus]"));
    CHECK_FALSE(find(rs, "second-min", "order-81"));
  }

  TEST_CASE("low-exponent bound") {
    const auto rs = verify_low_exponent_bound(shipped());
    CHECK(find(rs, "low-exponent", "c3wrc3")->status == CheckStatus::pass);
    CHECK(find(rs, "low-exponent", "c3wrc3")->actual == "29");
    CHECK(find(rs, "low-exponent", "c2^4")->actual == "16");
    CHECK(find(rs, "low-exponent", "m81")->status == CheckStatus::skipped);
  }

  TEST_CASE("second maximum") {
    const auto rs = verify_second_maximum(shipped());
    const CheckResult* m = find(rs, "second-max", "m27xc3");
    REQUIRE(m);
    CHECK(m->status == CheckStatus::pass);
    CHECK(m->actual == "23, equality");
    CHECK(find(rs, "second-max", "c9xc3xc3")->actual == "23, equality");
    CHECK(find(rs, "second-max", "m125xc5")->actual == "57, equality");
    const CheckResult* w = find(rs, "second-max", "c3wrc3");
    CHECK(w->status == CheckStatus::skipped);
    CHECK(w->status_text() == "skipped(Omega_1(G) = G)");
    CHECK(find(rs, "second-max.p2", "d8xc2")->actual == "14, equality");
  }

  TEST_CASE("p = 3 bounds") {
    const auto rs = verify_p3_bounds(shipped());
    CHECK(find(rs, "p3.census", "e27_sd_c3")->actual == "35/1");
    CHECK(find(rs, "p3.c1", "e27_sd_c3^2")->actual == "2c1=188");
    CHECK(find(rs, "p3.c1", "m27xc3")->actual == "2c1=26");
    CHECK(find(rs, "p3.c1", "m27xc3")->expected == "2c1 <= 62, strict");
  }

  TEST_CASE("no silent skips: every group appears in every per-group check") {
    const Report report = run_verification(VerifyOptions{"all", 3, 3}, &shipped());
    std::map<std::string, std::set<std::string>> subjects;
    for (const auto& r : report.checks) subjects[r.check_id].insert(r.subject);
    for (const auto& [id, names] : subjects) {
      if (id == "closed-form" || id == "second-min") continue;
      CAPTURE(id);
      for (const auto& e : shipped().entries) CHECK(names.count(e.name()) == 1);
    }
    for (const auto& e : shipped().entries) CHECK(subjects["second-min"].count(e.name()) == 1);
  }

  TEST_CASE("report invariants") {
    const Report report = run_verification(VerifyOptions{"all", 3, 3}, &shipped());
    ReportSummary tally;
    for (const auto& r : report.checks) {
      if (r.status == CheckStatus::pass) ++tally.pass;
      if (r.status == CheckStatus::fail) ++tally.fail;
      if (r.status == CheckStatus::skipped) {
        ++tally.skipped;
        CHECK_FALSE(r.reason.empty());
      } else {
        CHECK_FALSE(r.expected.empty());
        CHECK_FALSE(r.actual.empty());
      }
    }
    CHECK(tally == report.summary);
    CHECK(report.all_passed());
    CHECK(report.corpus_sha256 == shipped().sha256);
    for (std::size_t i = 1; i < report.checks.size(); ++i) {
      const auto& a = report.checks[i - 1];
      const auto& b = report.checks[i];
      CHECK((a.check_id < b.check_id || (a.check_id == b.check_id && a.subject <= b.subject)));
    }
  }

  TEST_CASE("a wrong census is reported as a failure") {
    Corpus tampered = shipped();
    for (auto& e : tampered.entries) {
      if (e.name() == "q8") e.facts->census.total = 6;
    }
    const auto rs = verify_global_properties(tampered);
    CHECK(find(rs, "global.oracle", "q8")->status == CheckStatus::fail);
    const Report report = make_report(verify_second_minimum(tampered), tampered.sha256);
    CHECK_FALSE(report.all_passed());
  }

  TEST_CASE("selectors") {
    CHECK_THROWS_AS(run_verification(VerifyOptions{"thm99"}, &shipped()), DomainError);
    CHECK_THROWS_AS(run_verification(VerifyOptions{"global"}, nullptr), DomainError);
    const Report eq1 = run_verification(VerifyOptions{"eq1", 2, 3}, nullptr);
    for (const auto& r : eq1.checks) CHECK(r.check_id == "closed-form");
    const Report global = run_verification(VerifyOptions{"global"}, &shipped());
    for (const auto& r : global.checks) CHECK(r.check_id.rfind("global.", 0) == 0);
  }
}
