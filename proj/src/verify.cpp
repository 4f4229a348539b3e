#include "cyclic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body` and stamps the elapsed time on the result it returns.
CheckResult timed(const std::function<CheckResult()>& body) {
  const auto start = Clock::now();
  CheckResult r = body();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

CheckResult outcome(std::string id, std::string subject, bool ok, std::string expected, std::string actual) {
  CheckResult r;
  r.check_id = std::move(id);
  r.subject = std::move(subject);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  return r;
}

CheckResult skip(std::string id, std::string subject, std::string reason) {
  CheckResult r;
  r.check_id = std::move(id);
  r.subject = std::move(subject);
  r.status = CheckStatus::skipped;
  r.reason = std::move(reason);
  return r;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// Expected statement of an equality characterisation: the bound value, and
// whether the group should attain it.
std::string bound_text(const std::string& relation, const std::string& bound, bool equality) {
  return relation + " " + bound + (equality ? ", equality" : ", strict");
}

// Number of isomorphism classes of groups of order p^n where the corpus can
// claim exhaustiveness.
std::optional<std::size_t> classification_size(std::uint64_t p, unsigned n) {
  if (n == 1) return 1;
  if (n == 2) return 2;
  if (n == 3) return 5;
  if (p == 2 && n == 4) return 14;
  return std::nullopt;
}

struct OrderClass {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<const CorpusEntry*> members;
};

std::vector<OrderClass> by_order(const Corpus& corpus) {
  std::map<std::pair<std::uint64_t, unsigned>, OrderClass> classes;
  for (const auto& e : corpus.entries) {
    if (!e.facts) continue;
    auto& c = classes[{e.facts->pp.p, e.facts->pp.n}];
    c.p = e.facts->pp.p;
    c.n = e.facts->pp.n;
    c.members.push_back(&e);
  }
  std::vector<OrderClass> out;
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  return out;
}

bool is_complete(const OrderClass& c) {
  const auto size = classification_size(c.p, c.n);
  if (!size || c.members.size() != *size) return false;
  std::set<std::string> prints;
  for (const auto* e : c.members) prints.insert(e->facts->fingerprint);
  return prints.size() == c.members.size();
}

// Minimum |C(G)| over non-cyclic groups of order p^n, and the families of
// the groups attaining it.
std::uint64_t second_min_census(std::uint64_t p, unsigned n) {
  if (p == 2 && n == 3) return 5;
  return (n - 1) * p + 2;
}

std::set<std::string> second_min_families(std::uint64_t p, unsigned n) {
  if (p == 2 && n == 3) return {"quaternion"};
  if (p == 2 && n == 4) return {"cp_x_cpn1", "modular", "quaternion"};
  return {"cp_x_cpn1", "modular", "extraspecial_exp_p2"};
}

std::string order_subject(const OrderClass& c, bool complete) {
  std::string s = "order-" + str(ipow(c.p, c.n));
  if (!complete) s += " [restricted-corpus]";
  return s;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "}";
}

constexpr const char* kNotPGroup = "not a p-group";

}  // namespace

std::string CheckResult::status_text() const {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped(" + reason + ")";
  }
  return "fail";
}

Report make_report(std::vector<CheckResult> checks, std::string corpus_sha256) {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.check_id, a.subject) < std::tie(b.check_id, b.subject);
  });
  Report r;
  r.version = "1.0.0";
  r.corpus_sha256 = std::move(corpus_sha256);
  for (const auto& c : checks) {
    switch (c.status) {
      case CheckStatus::pass: ++r.summary.pass; break;
      case CheckStatus::fail: ++r.summary.fail; break;
      case CheckStatus::skipped: ++r.summary.skipped; break;
    }
  }
  r.checks = std::move(checks);
  return r;
}

std::vector<FamilySpec> closed_form_grid(std::uint64_t pmax, unsigned nmax) {
  std::vector<FamilySpec> grid;
  for (unsigned n = 3; n <= nmax + 2; ++n) {
    grid.push_back(make_spec(Family::dihedral, 2, n));
    grid.push_back(make_spec(Family::quaternion, 2, n));
    if (n >= 4) grid.push_back(make_spec(Family::quasidihedral, 2, n));
  }
  for (std::uint64_t p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned n = 3; n <= nmax; ++n) {
      grid.push_back(make_spec(Family::cyclic, p, n));
      grid.push_back(make_spec(Family::elem_abelian, p, n));
      grid.push_back(make_spec(Family::cp_x_cpn1, p, n));
      if (p != 2 || n >= 4) grid.push_back(make_spec(Family::modular, p, n));
    }
  }
  return grid;
}

std::vector<CheckResult> verify_closed_forms(const std::vector<FamilySpec>& grid, std::size_t max_cosets) {
  std::vector<CheckResult> out;
  for (const auto& spec : grid) {
    out.push_back(timed([&] {
      const std::uint64_t expected = cc_closed_form(spec);
      const Group g = build(spec, max_cosets);
      const CyclicCensus by_sum = census_by_sum(g);
      const CyclicCensus by_enum = census_by_enumeration(g);
      const bool ok = by_sum.total == expected && by_enum.total == expected;
      return outcome("closed-form", to_string(spec), ok, str(expected),
                     "sum=" + str(by_sum.total) + ",enumeration=" + str(by_enum.total));
    }));
  }
  return out;
}

std::vector<CheckResult> verify_second_minimum(const Corpus& corpus) {
  const std::string id = "second-min";
  std::vector<CheckResult> out;
  for (const auto& e : corpus.entries) {
    out.push_back(timed([&]() -> CheckResult {
      if (!e.facts) return skip(id, e.name(), kNotPGroup);
      const auto& f = *e.facts;
      if (f.pp.n < 3) return skip(id, e.name(), "order below p^3");
      if (f.cyclic()) return skip(id, e.name(), "cyclic group is the minimum point");
      const std::uint64_t bound = second_min_census(f.pp.p, f.pp.n);
      const bool minimum_point = second_min_families(f.pp.p, f.pp.n).count(e.family()) > 0;
      const std::uint64_t total = f.census.total;
      const bool ok = total >= bound && ((total == bound) == minimum_point);
      return outcome(id, e.name(), ok, bound_text(">=", str(bound), minimum_point),
                     str(total) + (total == bound ? ", equality" : ", strict"));
    }));
  }
  for (const auto& c : by_order(corpus)) {
    if (c.n < 3) continue;
    const bool complete = is_complete(c);
    out.push_back(timed([&]() -> CheckResult {
      const std::uint64_t bound = second_min_census(c.p, c.n);
      const auto families = second_min_families(c.p, c.n);
      std::optional<std::uint64_t> minimum;
      for (const auto* e : c.members) {
        if (e->facts->cyclic()) continue;
        const auto t = e->facts->census.total;
        minimum = minimum ? std::min(*minimum, t) : t;
      }
      if (!minimum) return skip(id, order_subject(c, complete), "no non-cyclic groups of this order");
      std::vector<std::string> attained;
      std::vector<std::string> predicted;
      for (const auto* e : c.members) {
        if (e->facts->cyclic()) continue;
        if (e->facts->census.total == *minimum) attained.push_back(e->name());
        if (families.count(e->family())) predicted.push_back(e->name());
      }
      const Rational alpha_min(static_cast<std::int64_t>(*minimum), static_cast<std::int64_t>(ipow(c.p, c.n)));
      const Rational alpha_bound(static_cast<std::int64_t>(bound), static_cast<std::int64_t>(ipow(c.p, c.n)));
      const std::string subject = order_subject(c, complete);
      if (predicted.empty()) {
        // None of the minimum points is shipped at this order: everything
        // else must lie strictly above the bound.
        return outcome(id, subject, *minimum > bound, "alpha > " + to_string(alpha_bound),
                       "alpha=" + to_string(alpha_min) + " at " + join(attained));
      }
      const bool ok = *minimum == bound && attained == predicted;
      return outcome(id, subject, ok, "alpha=" + to_string(alpha_bound) + " at " + join(predicted),
                     "alpha=" + to_string(alpha_min) + " at " + join(attained));
    }));
  }
  return out;
}

std::vector<CheckResult> verify_low_exponent_bound(const Corpus& corpus) {
  const std::string id = "low-exponent";
  std::vector<CheckResult> out;
  for (const auto& e : corpus.entries) {
    out.push_back(timed([&]() -> CheckResult {
      if (!e.facts) return skip(id, e.name(), kNotPGroup);
      const auto& f = *e.facts;
      const auto p = f.pp.p;
      const auto n = f.pp.n;
      if (n < 4) return skip(id, e.name(), "n < 4");
      if (f.cyclic()) return skip(id, e.name(), "cyclic");
      if (f.exponent > ipow(p, n - 2)) return skip(id, e.name(), "exponent exceeds p^(n-2)");
      const std::uint64_t modular_count = (n - 1) * p + 2;
      return outcome(id, e.name(), f.census.total > modular_count, "> " + str(modular_count), str(f.census.total));
    }));
  }
  return out;
}

std::vector<CheckResult> verify_second_maximum(const Corpus& corpus) {
  std::vector<CheckResult> out;
  std::map<unsigned, std::uint64_t> d8_census;  // n -> |C(D_8 x C_2^{n-3})|
  for (const auto& e : corpus.entries) {
    const std::string& name = e.name();

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "second-max";
      if (!e.facts) return skip(id, name, kNotPGroup);
      const auto& f = *e.facts;
      const auto p = f.pp.p;
      if (p == 2) return skip(id, name, "p = 2");
      if (f.pp.n < 3) return skip(id, name, "order below p^3");
      if (f.exponent == p) return skip(id, name, "exponent p");
      if (f.omega_subgroup_order == f.order) return skip(id, name, "Omega_1(G) = G");
      const std::uint64_t bound = second_max_census_bound(p, f.pp.n);
      const bool characterised = f.exponent == p * p && f.omega_set_size == f.omega_subgroup_order &&
                                 f.order == f.omega_subgroup_order * p;
      const std::uint64_t total = f.census.total;
      const bool ok = total <= bound && ((total == bound) == characterised);
      return outcome(id, name, ok, bound_text("<=", str(bound), characterised),
                     str(total) + (total == bound ? ", equality" : ", strict"));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "second-max.c1-census-bound";
      if (!e.facts) return skip(id, name, kNotPGroup);
      const auto& f = *e.facts;
      const auto p = f.pp.p;
      if (f.exponent < p * p) return skip(id, name, "exponent below p^2");
      const Rational bound = census_bound_from_c1(p, f.pp.n, f.census.c1());
      const Rational total(static_cast<std::int64_t>(f.census.total));
      const bool tight = f.exponent == p * p;
      const bool ok = tight ? total == bound : total < bound;
      return outcome(id, name, ok, bound_text("<=", to_string(bound), tight), to_string(total));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "second-max.c1-cap";
      if (!e.facts) return skip(id, name, kNotPGroup);
      const auto& f = *e.facts;
      if (f.omega_subgroup_order == f.order) return skip(id, name, "Omega_1(G) = G");
      const std::uint64_t cap = c1_bound_proper_omega(f.pp.p, f.pp.n);
      return outcome(id, name, f.census.c1() <= cap, "<= " + str(cap), str(f.census.c1()));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "second-max.p2";
      if (!e.facts) return skip(id, name, kNotPGroup);
      const auto& f = *e.facts;
      if (f.pp.p != 2) return skip(id, name, "odd p");
      if (f.pp.n < 3) return skip(id, name, "order below p^3");
      if (f.exponent == 2) return skip(id, name, "exponent 2");
      const unsigned n = f.pp.n;
      if (!d8_census.count(n)) {
        const FamilySpec d8 = make_spec(Family::dihedral, 2, 3);
        const FamilySpec spec = n == 3 ? d8 : make_product({d8, make_spec(Family::elem_abelian, 2, n - 3)});
        d8_census[n] = census_by_sum(build(spec)).total;
      }
      const std::uint64_t bound = d8_census[n];
      const bool maximum_point = e.family() == "d8_x_elem" || (n == 3 && e.family() == "dihedral");
      const std::uint64_t total = f.census.total;
      const bool ok = total <= bound && ((total == bound) == maximum_point);
      return outcome(id, name, ok, bound_text("<=", str(bound), maximum_point),
                     str(total) + (total == bound ? ", equality" : ", strict"));
    }));
  }
  return out;
}

std::vector<CheckResult> verify_p3_bounds(const Corpus& corpus) {
  std::vector<CheckResult> out;
  for (const auto& e : corpus.entries) {
    const std::string& name = e.name();
    const auto precondition = [&](const std::string& id) -> std::optional<CheckResult> {
      if (!e.facts) return skip(id, name, kNotPGroup);
      if (e.facts->pp.p != 3) return skip(id, name, "p != 3");
      if (e.facts->pp.n < 3) return skip(id, name, "order below 27");
      if (e.facts->exponent == 3) return skip(id, name, "exponent 3");
      return std::nullopt;
    };
    const bool extremal = e.family() == "p3_extremal";

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "p3.c1";
      if (auto s = precondition(id)) return *s;
      const auto& f = *e.facts;
      const std::uint64_t cap = p3_c1_bound(f.pp.n);
      const std::uint64_t c1 = f.census.c1();
      const bool ok = c1 <= cap && ((c1 == cap) == extremal);
      return outcome(id, name, ok, bound_text("2c1 <=", str(2 * cap), extremal), "2c1=" + str(2 * c1));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "p3.census";
      if (auto s = precondition(id)) return *s;
      const auto& f = *e.facts;
      const Rational cap = p3_census_bound(f.pp.n);
      const Rational total(static_cast<std::int64_t>(f.census.total));
      const bool ok = total <= cap && ((total == cap) == extremal);
      return outcome(id, name, ok, bound_text("<=", to_string(cap), extremal), to_string(total));
    }));
  }
  return out;
}

std::vector<CheckResult> verify_global_properties(const Corpus& corpus) {
  std::vector<CheckResult> out;
  for (const auto& e : corpus.entries) {
    const std::string& name = e.name();
    const Group& g = e.group;

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "global.order";
      if (!e.presentation.meta.expected_order) return skip(id, name, "no expected order");
      const auto expected = *e.presentation.meta.expected_order;
      return outcome(id, name, g.order() == expected, str(expected), str(g.order()));
    }));

    if (!e.facts) {
      for (const char* id : {"global.oracle", "global.partition", "global.miller", "global.richards",
                             "global.alpha-max", "global.alpha-min", "global.maximal-decomposition",
                             "global.frattini", "global.omega-derived", "global.class2-omega"}) {
        out.push_back(skip(id, name, kNotPGroup));
      }
      continue;
    }
    const auto& f = *e.facts;
    const auto p = f.pp.p;
    const auto n = f.pp.n;
    const auto& c = f.census;
    const auto census_text = [](const CyclicCensus& cc) {
      std::string s = "c=[";
      for (std::size_t k = 0; k < cc.c.size(); ++k) s += (k ? "," : "") + std::to_string(cc.c[k]);
      return s + "],total=" + std::to_string(cc.total) + ",alpha=" + to_string(cc.alpha);
    };

    out.push_back(timed([&] {
      return outcome("global.oracle", name, f.census == f.census_enumerated, census_text(c),
                     census_text(f.census_enumerated));
    }));

    out.push_back(timed([&] {
      std::uint64_t sum = 0;
      for (unsigned k = 0; k < c.c.size(); ++k) sum += c.c[k] * euler_phi_prime_power(p, k);
      return outcome("global.partition", name, sum == f.order, str(f.order), str(sum));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "global.miller";
      if (p == 2) return skip(id, name, "p = 2");
      if (f.cyclic()) return skip(id, name, "cyclic");
      std::vector<std::string> residues;
      bool ok = true;
      for (unsigned k = 2; k <= n; ++k) {
        residues.push_back(str(c.c[k] % p));
        ok = ok && c.c[k] % p == 0;
      }
      if (residues.empty()) return skip(id, name, "n < 2");
      return outcome(id, name, ok, "c_k mod p = 0 for k >= 2", "residues " + join(residues));
    }));

    out.push_back(timed([&] {
      const std::uint64_t tau = divisor_count(f.order);
      const bool ok = c.total >= tau && ((c.total == tau) == f.cyclic());
      return outcome("global.richards", name, ok, bound_text(">=", str(tau), f.cyclic()), str(c.total));
    }));

    out.push_back(timed([&] {
      const Rational top(static_cast<std::int64_t>(1 + (f.order - 1) / (p - 1)), static_cast<std::int64_t>(f.order));
      const bool exp_p = f.exponent == p;
      const bool ok = c.alpha <= top && ((c.alpha == top) == exp_p);
      return outcome("global.alpha-max", name, ok, bound_text("<=", to_string(top), exp_p), to_string(c.alpha));
    }));

    out.push_back(timed([&] {
      const Rational bottom(static_cast<std::int64_t>(n + 1), static_cast<std::int64_t>(f.order));
      const bool ok = c.alpha >= bottom && ((c.alpha == bottom) == f.cyclic());
      return outcome("global.alpha-min", name, ok, bound_text(">=", to_string(bottom), f.cyclic()),
                     to_string(c.alpha));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "global.maximal-decomposition";
      const auto maximals = maximal_subgroups(g, p);
      if (maximals.empty()) return skip(id, name, "trivial group");
      std::size_t good = 0;
      for (const auto& m : maximals) {
        // |C(N)| by distinct <x>, x in N; the rest by the totient sum.
        std::set<std::vector<ElementIndex>> cyclic_in_n;
        for (ElementIndex x : m.elements()) {
          std::vector<ElementIndex> powers{Group::identity()};
          for (ElementIndex y = x; y != Group::identity(); y = g.multiply(y, x)) powers.push_back(y);
          std::sort(powers.begin(), powers.end());
          cyclic_in_n.insert(std::move(powers));
        }
        std::vector<ElementIndex> outside;
        for (std::size_t x = 0; x < g.order(); ++x) {
          if (!m.contains(static_cast<ElementIndex>(x))) outside.push_back(static_cast<ElementIndex>(x));
        }
        const Rational rhs = Rational(static_cast<std::int64_t>(cyclic_in_n.size())) + totient_reciprocal_sum(g, outside);
        if (rhs == Rational(static_cast<std::int64_t>(f.census_enumerated.total))) ++good;
      }
      return outcome(id, name, good == maximals.size(), str(maximals.size()) + " maximal subgroups decompose",
                     str(good) + " decompose");
    }));

    out.push_back(timed([&] {
      const Subgroup phi = frattini_subgroup(g, p);
      Subgroup meet = whole_group(g);
      for (const auto& m : maximal_subgroups(g, p)) meet = intersection(meet, m);
      return outcome("global.frattini", name, meet == phi, "|Phi|=" + str(phi.order()),
                     "|intersection of maximals|=" + str(meet.order()));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "global.omega-derived";
      if (f.omega_subgroup_order != f.order) return skip(id, name, "Omega_1(G) != G");
      return outcome(id, name, f.derived_equals_frattini, "G' = Phi(G)",
                     "|G'|=" + str(f.derived_order) + ",|Phi|=" + str(f.frattini_order));
    }));

    out.push_back(timed([&]() -> CheckResult {
      const std::string id = "global.class2-omega";
      if (p == 2) return skip(id, name, "p = 2");
      if (!f.class_at_most_two) return skip(id, name, "class above 2");
      return outcome(id, name, f.omega_subgroup_exponent == p, "exp(Omega_1) = " + str(p),
                     str(f.omega_subgroup_exponent));
    }));
  }
  return out;
}

Report run_verification(const VerifyOptions& options, const Corpus* corpus) {
  const std::string& sel = options.selector;
  if (std::find(std::begin(kSelectors), std::end(kSelectors), sel) == std::end(kSelectors)) {
    throw DomainError("unknown verification selector '" + sel + "'");
  }
  const bool all = sel == "all";
  std::vector<CheckResult> checks;
  const auto append = [&](std::vector<CheckResult> more) {
    checks.insert(checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (all || sel == "eq1") {
    append(verify_closed_forms(closed_form_grid(options.grid_pmax, options.grid_nmax), options.max_cosets));
  }
  if (!all && sel == "eq1") return make_report(std::move(checks), corpus ? corpus->sha256 : "");
  if (!corpus) throw DomainError("selector '" + sel + "' needs a corpus");
  if (all || sel == "thm23") append(verify_second_minimum(*corpus));
  if (all || sel == "lemma22") append(verify_low_exponent_bound(*corpus));
  if (all || sel == "thm31") append(verify_second_maximum(*corpus));
  if (all || sel == "p3") append(verify_p3_bounds(*corpus));
  if (all || sel == "global") append(verify_global_properties(*corpus));
  return make_report(std::move(checks), corpus->sha256);
}

}  // namespace cyclic
