#include "cyclic/catalog.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <utility>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kNames{{
    {Family::cyclic, "cyclic"},
    {Family::elem_abelian, "elem_abelian"},
    {Family::cp_x_cpn1, "cp_x_cpn1"},
    {Family::modular, "modular"},
    {Family::dihedral, "dihedral"},
    {Family::quaternion, "quaternion"},
    {Family::quasidihedral, "quasidihedral"},
    {Family::extraspecial_exp_p, "extraspecial_exp_p"},
    {Family::extraspecial_exp_p2, "extraspecial_exp_p2"},
    {Family::wreath_cp_cp, "wreath_cp_cp"},
    {Family::direct_product, "product"},
}};

bool is_two_group_family(Family f) {
  return f == Family::dihedral || f == Family::quaternion || f == Family::quasidihedral;
}

Word gen(std::uint32_t g, std::int64_t e = 1) { return Word::generator(g, e); }

std::int64_t as_exp(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// L = R as the relator L R^-1
Word relation(const Word& lhs, const Word& rhs) { return lhs * word_inverse(rhs); }

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("bad integer '" + std::string(s) + "' in family spec '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

Family family_from_name(std::string_view name) {
  for (const auto& [fam, n] : kNames) {
    if (n == name) return fam;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

FamilySpec make_spec(Family f, std::uint64_t p, unsigned n) {
  FamilySpec s{f, p, n, {}};
  validate(s);
  return s;
}

FamilySpec make_product(std::vector<FamilySpec> factors) {
  FamilySpec s;
  s.family = Family::direct_product;
  s.n = 0;
  if (!factors.empty()) s.p = factors.front().p;
  for (const auto& f : factors) s.n += f.n;
  s.factors = std::move(factors);
  validate(s);
  return s;
}

void validate(const FamilySpec& s) {
  const auto fail = [&](const std::string& why) {
    throw DomainError("invalid family spec " + std::string(family_name(s.family)) + ":p=" + std::to_string(s.p) +
                      ",n=" + std::to_string(s.n) + ": " + why);
  };
  if (!is_prime(s.p)) fail("p must be prime");
  if (s.family != Family::direct_product && !s.factors.empty()) fail("only products have factors");
  switch (s.family) {
    case Family::cyclic:
    case Family::elem_abelian:
      if (s.n < 1) fail("n >= 1 required");
      break;
    case Family::cp_x_cpn1:
      if (s.n < 2) fail("n >= 2 required");
      break;
    case Family::modular:
      if (s.n < 3 || (s.p == 2 && s.n < 4)) fail("n >= 3 required (n >= 4 for p = 2)");
      break;
    case Family::dihedral:
    case Family::quaternion:
      if (s.p != 2 || s.n < 3) fail("p = 2 and n >= 3 required");
      break;
    case Family::quasidihedral:
      if (s.p != 2 || s.n < 4) fail("p = 2 and n >= 4 required");
      break;
    case Family::extraspecial_exp_p:
    case Family::extraspecial_exp_p2:
      if (s.p == 2 || s.n != 3) fail("odd p and n = 3 required");
      break;
    case Family::wreath_cp_cp:
      if (s.n != s.p + 1) fail("n = p + 1 required");
      break;
    case Family::direct_product: {
      if (s.factors.size() < 2) fail("a product needs at least two factors");
      unsigned total = 0;
      for (const auto& f : s.factors) {
        validate(f);
        if (f.p != s.p) fail("all factors must share the prime");
        total += f.n;
      }
      if (total != s.n) fail("n must be the sum of the factor exponents");
      break;
    }
  }
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const Family f = family_from_name(name);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (f == Family::direct_product) {
    std::vector<FamilySpec> factors;
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t end = rest.find(';', start);
      if (end == std::string_view::npos) end = rest.size();
      factors.push_back(parse_family_spec(rest.substr(start, end - start)));
      start = end + 1;
    }
    return make_product(std::move(factors));
  }

  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> n;
  std::size_t start = 0;
  while (start < rest.size()) {
    std::size_t end = rest.find(',', start);
    if (end == std::string_view::npos) end = rest.size();
    const std::string_view kv = rest.substr(start, end - start);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) throw DomainError("expected key=value in family spec '" + std::string(text) + "'");
    const std::string_view key = kv.substr(0, eq);
    const std::uint64_t value = parse_uint(kv.substr(eq + 1), text);
    if (key == "p") {
      p = value;
    } else if (key == "n") {
      n = value;
    } else {
      throw DomainError("unknown key '" + std::string(key) + "' in family spec '" + std::string(text) + "'");
    }
    start = end + 1;
  }
  if (!p) {
    if (!is_two_group_family(f)) throw DomainError("family spec '" + std::string(text) + "' needs p");
    p = 2;
  }
  if (!n) {
    if (f == Family::extraspecial_exp_p || f == Family::extraspecial_exp_p2) {
      n = 3;
    } else if (f == Family::wreath_cp_cp) {
      n = *p + 1;
    } else {
      throw DomainError("family spec '" + std::string(text) + "' needs n");
    }
  }
  if (*n > 64) throw DomainError("n too large in family spec '" + std::string(text) + "'");
  return make_spec(f, *p, static_cast<unsigned>(*n));
}

std::string to_string(const FamilySpec& s) {
  std::string out(family_name(s.family));
  out += ':';
  if (s.family == Family::direct_product) {
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      if (i > 0) out += ';';
      out += to_string(s.factors[i]);
    }
    return out;
  }
  return out + "p=" + std::to_string(s.p) + ",n=" + std::to_string(s.n);
}

Presentation family_presentation(const FamilySpec& s) {
  validate(s);
  const std::uint64_t p = s.p;
  const unsigned n = s.n;
  Presentation pr;
  pr.name = to_string(s);
  pr.meta.prime = p;
  pr.meta.expected_order = ipow(p, n);
  pr.meta.family = std::string(family_name(s.family));
  const Word x = gen(0);
  const Word y = gen(1);
  switch (s.family) {
    case Family::cyclic:
      pr.generators = {"x"};
      pr.relators = {gen(0, as_exp(ipow(p, n)))};
      break;
    case Family::elem_abelian:
      for (unsigned i = 0; i < n; ++i) {
        pr.generators.push_back("a" + std::to_string(i + 1));
        pr.relators.push_back(gen(i, as_exp(p)));
      }
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) pr.relators.push_back(commutator(gen(i), gen(j)));
      }
      break;
    case Family::cp_x_cpn1:
      pr.generators = {"x", "y"};
      pr.relators = {gen(0, as_exp(ipow(p, n - 1))), gen(1, as_exp(p)), commutator(x, y)};
      break;
    case Family::modular:
    case Family::extraspecial_exp_p2:
      // x^{p^{n-1}} = y^p = 1, x^y = x^{1+p^{n-2}}
      pr.generators = {"x", "y"};
      pr.relators = {gen(0, as_exp(ipow(p, n - 1))), gen(1, as_exp(p)),
                     relation(conjugate(x, y), gen(0, as_exp(1 + ipow(p, n - 2))))};
      break;
    case Family::dihedral:
      // x^{2^{n-1}} = y^2 = 1, yxy = x^-1
      pr.generators = {"x", "y"};
      pr.relators = {gen(0, as_exp(ipow(2, n - 1))), gen(1, 2), relation(y * x * y, gen(0, -1))};
      break;
    case Family::quaternion:
      // x^{2^{n-1}} = y^4 = 1, yxy^-1 = x^{2^{n-1}-1}, y^2 = x^{2^{n-2}}
      pr.generators = {"x", "y"};
      pr.relators = {gen(0, as_exp(ipow(2, n - 1))), gen(1, 4),
                     relation(y * x * gen(1, -1), gen(0, as_exp(ipow(2, n - 1) - 1))),
                     relation(gen(1, 2), gen(0, as_exp(ipow(2, n - 2))))};
      break;
    case Family::quasidihedral:
      // x^{2^{n-1}} = y^2 = 1, yxy = x^{2^{n-2}-1}
      pr.generators = {"x", "y"};
      pr.relators = {gen(0, as_exp(ipow(2, n - 1))), gen(1, 2),
                     relation(y * x * y, gen(0, as_exp(ipow(2, n - 2) - 1)))};
      break;
    case Family::extraspecial_exp_p: {
      // x^p = y^p = [x,y]^p = 1, [x,y] central
      pr.generators = {"x", "y"};
      const Word z = commutator(x, y);
      pr.relators = {gen(0, as_exp(p)), gen(1, as_exp(p)), word_power(z, as_exp(p)), commutator(z, x),
                     commutator(z, y)};
      break;
    }
    case Family::wreath_cp_cp: {
      // a generates one base coordinate, t permutes the p coordinates.
      pr.generators = {"a", "t"};
      const Word a = gen(0);
      pr.relators = {gen(0, as_exp(p)), gen(1, as_exp(p))};
      for (std::uint64_t i = 1; i < p; ++i) {
        pr.relators.push_back(commutator(a, conjugate(a, gen(1, as_exp(i)))));
      }
      break;
    }
    case Family::direct_product:
      throw DomainError("products have no single presentation; build the factors");
  }
  return pr;
}

Group build(const FamilySpec& s, std::size_t max_cosets) {
  validate(s);
  if (s.family == Family::direct_product) {
    Group acc = build(s.factors.front(), max_cosets);
    for (std::size_t i = 1; i < s.factors.size(); ++i) acc = direct_product(acc, build(s.factors[i], max_cosets));
    return acc;
  }
  const Presentation pr = family_presentation(s);
  const CosetTable table = coset_enumerate(pr, {}, max_cosets);
  Group g = to_permutation_group(table);
  if (g.order() != ipow(s.p, s.n)) {
    throw InvariantViolation(to_string(s) + " enumerated to order " + std::to_string(g.order()));
  }
  return g;
}

std::uint64_t cc_closed_form(const FamilySpec& s) {
  validate(s);
  const std::uint64_t p = s.p;
  const unsigned n = s.n;
  switch (s.family) {
    case Family::cyclic:
      return n + 1;
    case Family::elem_abelian:
      return 1 + (ipow(p, n) - 1) / (p - 1);
    case Family::cp_x_cpn1:
    case Family::modular:
      return (n - 1) * p + 2;
    case Family::dihedral:
      return ipow(2, n - 1) + n;
    case Family::quaternion:
      return ipow(2, n - 2) + n;
    case Family::quasidihedral:
      return 3 * ipow(2, n - 3) + n;
    default:
      throw DomainError("no closed form for family " + std::string(family_name(s.family)));
  }
}

std::uint64_t second_max_census_bound(std::uint64_t p, unsigned n) {
  if (p == 2 || !is_prime(p)) throw DomainError("bound needs an odd prime");
  if (n < 3) throw DomainError("bound needs n >= 3");
  std::uint64_t total = 2 * ipow(p, n - 2) + 2;
  for (unsigned i = 1; i + 3 <= n; ++i) total += ipow(p, i);
  return total;
}

Rational census_bound_from_c1(std::uint64_t p, unsigned n, std::uint64_t c1) {
  const auto P = static_cast<std::int64_t>(p);
  const auto num = static_cast<std::int64_t>(ipow(p, n)) + P * P - P - 1 + (P - 1) * (P - 1) * static_cast<std::int64_t>(c1);
  return Rational(num, P * P - P);
}

std::uint64_t c1_bound_proper_omega(std::uint64_t p, unsigned n) {
  if (n < 1) throw DomainError("c1 bound needs n >= 1");
  return (ipow(p, n - 1) - 1) / (p - 1);
}

std::uint64_t p3_c1_bound(unsigned n) {
  if (n < 3) throw DomainError("p = 3 bounds need n >= 3");
  return (7 * ipow(3, n - 2) - 1) / 2;
}

Rational p3_census_bound(unsigned n) {
  if (n < 3) throw DomainError("p = 3 bounds need n >= 3");
  return Rational(static_cast<std::int64_t>(23 * ipow(3, n - 3) + 1), 2);
}

}  // namespace cyclic
