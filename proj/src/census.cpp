#include "cyclic/census.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

PrimePower require_p_group(const Group& g) {
  const auto pp = is_p_group(g);
  if (!pp) throw DomainError("census needs a p-group; order " + std::to_string(g.order()) + " is not a prime power");
  return *pp;
}

unsigned log_p(std::uint64_t value, std::uint64_t p) {
  unsigned k = 0;
  while (value > 1) {
    if (value % p != 0) throw InvariantViolation(std::to_string(value) + " is not a power of " + std::to_string(p));
    value /= p;
    ++k;
  }
  return k;
}

CyclicCensus finish(PrimePower pp, std::vector<std::uint64_t> c, std::uint64_t order) {
  CyclicCensus out;
  out.p = pp.p;
  out.n = pp.n;
  out.c = std::move(c);
  for (unsigned k = 0; k <= pp.n; ++k) {
    out.total += out.c[k];
    if (out.c[k] > 0) out.exponent_k = k;
  }
  out.alpha = Rational(static_cast<std::int64_t>(out.total), static_cast<std::int64_t>(order));
  return out;
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::uint64_t euler_phi_prime_power(std::uint64_t p, unsigned k) {
  if (k == 0) return 1;
  std::uint64_t r = p - 1;
  for (unsigned i = 1; i < k; ++i) r *= p;
  return r;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    result -= result / d;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t divisor_count(std::uint64_t m) {
  if (m == 0) throw DomainError("divisor_count needs a positive integer");
  std::uint64_t count = 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    count *= e + 1;
  }
  if (m > 1) count *= 2;
  return count;
}

Rational totient_reciprocal_sum(const Group& g, std::span<const ElementIndex> elements) {
  Rational sum(0);
  for (ElementIndex x : elements) sum += Rational(1, static_cast<std::int64_t>(euler_phi(g.element_order(x))));
  return sum;
}

std::uint64_t cyclic_subgroup_count(const Group& g) {
  const Subgroup all = whole_group(g);
  const Rational sum = totient_reciprocal_sum(g, all.elements());
  if (sum.denominator() != 1) throw InvariantViolation("totient sum is not an integer: " + to_string(sum));
  return static_cast<std::uint64_t>(sum.numerator());
}

CyclicCensus census_by_sum(const Group& g) {
  const PrimePower pp = require_p_group(g);
  std::vector<std::uint64_t> by_order(pp.n + 1, 0);
  for (auto o : g.element_orders()) ++by_order[log_p(o, pp.p)];

  std::vector<std::uint64_t> c(pp.n + 1, 0);
  for (unsigned k = 0; k <= pp.n; ++k) {
    const std::uint64_t phi = euler_phi_prime_power(pp.p, k);
    if (by_order[k] % phi != 0) {
      throw InvariantViolation("elements of order p^" + std::to_string(k) + " not divisible by phi");
    }
    c[k] = by_order[k] / phi;
  }
  CyclicCensus out = finish(pp, std::move(c), g.order());

  const std::uint64_t total = cyclic_subgroup_count(g);
  if (total != out.total) {
    throw InvariantViolation("totient sum " + std::to_string(total) + " disagrees with per-order count " +
                             std::to_string(out.total));
  }
  return out;
}

CyclicCensus census_by_enumeration(const Group& g) {
  const PrimePower pp = require_p_group(g);
  std::set<std::vector<ElementIndex>> subgroups;
  std::vector<ElementIndex> powers;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto x = static_cast<ElementIndex>(i);
    powers.assign({Group::identity()});
    for (ElementIndex y = x; y != Group::identity(); y = g.multiply(y, x)) powers.push_back(y);
    std::sort(powers.begin(), powers.end());
    subgroups.insert(powers);
  }
  std::vector<std::uint64_t> c(pp.n + 1, 0);
  for (const auto& h : subgroups) ++c[log_p(h.size(), pp.p)];
  return finish(pp, std::move(c), g.order());
}

Rational alpha(const Group& g) {
  return Rational(static_cast<std::int64_t>(cyclic_subgroup_count(g)), static_cast<std::int64_t>(g.order()));
}

}  // namespace cyclic
