#include "cyclic/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept { return boost::hash_range(p.begin(), p.end()); }
};

std::uint64_t cycle_lcm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

void require_p_group(const Group& g, std::uint64_t p) {
  const auto pp = is_p_group(g);
  if (g.order() == 1 && is_prime(p)) return;
  if (!pp || pp->p != p) {
    throw DomainError("group of order " + std::to_string(g.order()) + " is not a " + std::to_string(p) + "-group");
  }
}

}  // namespace

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<Point>(i);
  return out;
}

Perm identity_perm(std::size_t degree) {
  Perm out(degree);
  std::iota(out.begin(), out.end(), Point{0});
  return out;
}

Group Group::closure(std::size_t degree, std::span<const Perm> gens, std::size_t cap) {
  if (degree == 0) throw DomainError("permutation degree must be positive");
  for (const auto& g : gens) {
    if (g.size() != degree) throw DomainError("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (Point x : g) {
      if (x >= degree || hit[x]) throw DomainError("generator is not a permutation");
      hit[x] = true;
    }
  }

  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> found;
  found.push_back(identity_perm(degree));
  seen.insert(found.front());
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(found[head], g);
      if (seen.insert(next).second) {
        if (found.size() >= cap) {
          throw ResourceLimitError("group closure exceeds cap of " + std::to_string(cap) + " elements");
        }
        found.push_back(std::move(next));
      }
    }
  }
  seen.clear();
  std::sort(found.begin(), found.end());

  Group out;
  out.degree_ = degree;
  out.elements_ = std::move(found);
  out.build_lookup();

  out.orders_.resize(out.order());
  out.inverses_.resize(out.order());
  for (std::size_t i = 0; i < out.order(); ++i) {
    out.orders_[i] = cycle_lcm(out.elements_[i]);
    out.inverses_[i] = *out.find(invert(out.elements_[i]));
  }
  for (const auto& g : gens) out.generators_.push_back(*out.find(g));
  return out;
}

void Group::build_lookup() {
  const std::size_t n = order();
  std::vector<std::uint64_t> keys(n, 0);
  std::size_t distinct = 1;
  std::uint64_t radix_power = 1;
  bool packed = true;
  for (Point beta = 0; beta < degree_ && distinct < n; ++beta) {
    if (radix_power > std::numeric_limits<std::uint64_t>::max() / degree_) {
      packed = false;
      break;
    }
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = keys[i] * degree_ + elements_[i][beta];
    std::vector<std::uint64_t> sorted = next;
    std::sort(sorted.begin(), sorted.end());
    const auto count = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    if (count > distinct) {
      base_.push_back(beta);
      keys = std::move(next);
      distinct = count;
      radix_power *= degree_;
    }
  }
  if (!packed) {
    // Lookups fall back to binary search over the sorted element list.
    base_.clear();
    return;
  }
  by_base_image_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) by_base_image_.emplace(keys[i], static_cast<ElementIndex>(i));
}

std::uint64_t Group::key_of_base_images(const Point* images) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < base_.size(); ++i) key = key * degree_ + images[i];
  return key;
}

std::optional<ElementIndex> Group::find(const Perm& p) const {
  if (p.size() != degree_) return std::nullopt;
  if (!base_.empty() || order() == 1) {
    std::uint64_t key = 0;
    for (Point b : base_) key = key * degree_ + p[b];
    const auto it = by_base_image_.find(key);
    if (it == by_base_image_.end() || elements_[it->second] != p) return std::nullopt;
    return it->second;
  }
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<ElementIndex>(it - elements_.begin());
}

ElementIndex Group::multiply(ElementIndex a, ElementIndex b) const {
  if (base_.empty() && order() > 1) return *find(compose(elements_[a], elements_[b]));
  const Perm& pa = elements_[a];
  const Perm& pb = elements_[b];
  std::uint64_t key = 0;
  for (Point beta : base_) key = key * degree_ + pb[pa[beta]];
  return by_base_image_.find(key)->second;
}

ElementIndex Group::power(ElementIndex a, std::int64_t k) const {
  const auto o = static_cast<std::int64_t>(orders_[a]);
  std::int64_t e = ((k % o) + o) % o;
  ElementIndex result = identity();
  ElementIndex base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

ElementIndex Group::commutator(ElementIndex a, ElementIndex b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

bool Group::is_abelian() const {
  for (ElementIndex a : generators_) {
    for (ElementIndex b : generators_) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

Subgroup::Subgroup(std::vector<ElementIndex> sorted_elements) : elements_(std::move(sorted_elements)) {}

bool Subgroup::contains(ElementIndex x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power_decomposition(std::uint64_t m) {
  if (m < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (m % p != 0) ++p;
  unsigned n = 0;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, n};
}

std::optional<PrimePower> is_p_group(const Group& g) { return prime_power_decomposition(g.order()); }

std::uint64_t element_order(const Group& g, ElementIndex x) { return g.element_order(x); }

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, o);
  return e;
}

Subgroup whole_group(const Group& g) {
  std::vector<ElementIndex> all(g.order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  return Subgroup(std::move(all));
}

Subgroup trivial_subgroup(const Group&) { return Subgroup({Group::identity()}); }

Subgroup generate(const Group& g, std::span<const ElementIndex> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementIndex> found{Group::identity()};
  in[Group::identity()] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (ElementIndex s : gens) {
      const ElementIndex next = g.multiply(found[head], s);
      if (!in[next]) {
        in[next] = true;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup(std::move(found));
}

Subgroup normal_closure(const Group& g, std::span<const ElementIndex> gens) {
  std::vector<ElementIndex> current(gens.begin(), gens.end());
  Subgroup h = generate(g, current);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t count = current.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (ElementIndex t : g.generators()) {
        const ElementIndex c = g.multiply(g.multiply(g.inverse(t), current[i]), t);
        if (!h.contains(c)) {
          current.push_back(c);
          h = generate(g, current);
          changed = true;
        }
      }
    }
  }
  return h;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementIndex> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup(std::move(out));
}

std::vector<ElementIndex> omega1_set(const Group& g, std::uint64_t p) {
  require_p_group(g, p);
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.element_order(static_cast<ElementIndex>(i)) <= p) out.push_back(static_cast<ElementIndex>(i));
  }
  return out;
}

Subgroup omega1_subgroup(const Group& g, std::uint64_t p) {
  const auto set = omega1_set(g, p);
  return generate(g, set);
}

Subgroup derived_subgroup(const Group& g) {
  std::vector<ElementIndex> comms;
  for (ElementIndex a : g.generators()) {
    for (ElementIndex b : g.generators()) {
      const ElementIndex c = g.commutator(a, b);
      if (c != Group::identity()) comms.push_back(c);
    }
  }
  return normal_closure(g, comms);
}

Subgroup center(const Group& g) {
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto x = static_cast<ElementIndex>(i);
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](ElementIndex t) { return g.multiply(x, t) == g.multiply(t, x); });
    if (central) out.push_back(x);
  }
  return Subgroup(std::move(out));
}

Subgroup frattini_subgroup(const Group& g, std::uint64_t p) {
  require_p_group(g, p);
  const Subgroup derived = derived_subgroup(g);
  std::vector<bool> is_power(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) is_power[g.power(static_cast<ElementIndex>(i), static_cast<std::int64_t>(p))] = true;
  std::vector<ElementIndex> gens;
  for (ElementIndex d : derived.elements()) {
    if (d != Group::identity()) gens.push_back(d);
  }
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (is_power[i] && !derived.contains(static_cast<ElementIndex>(i))) gens.push_back(static_cast<ElementIndex>(i));
  }
  return normal_closure(g, gens);
}

std::vector<Subgroup> maximal_subgroups(const Group& g, std::uint64_t p) {
  require_p_group(g, p);
  const Subgroup phi = frattini_subgroup(g, p);
  if (phi.order() == g.order()) return {};

  // Coordinates of every element in G/Phi(G) = F_p^d relative to a basis
  // b_1..b_d picked greedily from the generators.
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> coords(n);
  std::vector<bool> labelled(n, false);
  std::vector<ElementIndex> covered;
  for (ElementIndex x : phi.elements()) {
    labelled[x] = true;
    covered.push_back(x);
  }
  std::size_t d = 0;
  auto extend = [&](ElementIndex b) {
    const std::size_t before = covered.size();
    ElementIndex bi = b;
    for (std::uint32_t i = 1; i < p; ++i, bi = g.multiply(bi, b)) {
      for (std::size_t k = 0; k < before; ++k) {
        const ElementIndex y = g.multiply(covered[k], bi);
        if (labelled[y]) throw InvariantViolation("Frattini quotient is not elementary abelian");
        labelled[y] = true;
        coords[y] = coords[covered[k]];
        coords[y].resize(d + 1, 0);
        coords[y][d] = i;
        covered.push_back(y);
      }
    }
    ++d;
  };
  for (ElementIndex t : g.generators()) {
    if (!labelled[t]) extend(t);
  }
  for (std::size_t i = 0; i < n && covered.size() < n; ++i) {
    if (!labelled[i]) extend(static_cast<ElementIndex>(i));
  }
  for (auto& c : coords) c.resize(d, 0);

  // One hyperplane per normalised functional (first nonzero entry 1),
  // enumerated in lexicographic order of the functional.
  std::vector<Subgroup> out;
  std::vector<std::uint32_t> f(d, 0);
  auto next_functional = [&]() {
    for (std::size_t i = d; i-- > 0;) {
      if (++f[i] < p) return true;
      f[i] = 0;
    }
    return false;
  };
  while (next_functional()) {
    const auto lead = std::find_if(f.begin(), f.end(), [](std::uint32_t v) { return v != 0; });
    if (*lead != 1) continue;
    std::vector<ElementIndex> members;
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += static_cast<std::uint64_t>(f[i]) * coords[x][i];
      if (s % p == 0) members.push_back(static_cast<ElementIndex>(x));
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

Group direct_product(const Group& a, const Group& b, std::size_t cap) {
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  std::vector<Perm> gens;
  for (ElementIndex x : a.generators()) {
    Perm p = identity_perm(da + db);
    std::copy(a.element(x).begin(), a.element(x).end(), p.begin());
    gens.push_back(std::move(p));
  }
  for (ElementIndex y : b.generators()) {
    Perm p = identity_perm(da + db);
    for (std::size_t i = 0; i < db; ++i) p[da + i] = static_cast<Point>(da + b.element(y)[i]);
    gens.push_back(std::move(p));
  }
  return Group::closure(da + db, gens, cap);
}

Group subgroup_as_group(const Group& g, const Subgroup& h) {
  std::vector<ElementIndex> gens;
  Subgroup spanned = trivial_subgroup(g);
  for (ElementIndex x : h.elements()) {
    if (!spanned.contains(x)) {
      gens.push_back(x);
      spanned = generate(g, gens);
    }
  }
  std::vector<Perm> perms;
  for (ElementIndex x : gens) perms.push_back(g.element(x));
  return Group::closure(g.degree(), perms);
}

}  // namespace cyclic
