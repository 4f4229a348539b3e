#include "cyclic/coset_enum.hpp"

#include <string>
#include <utility>

#include "cyclic/errors.hpp"

namespace cyclic {

CosetTable::CosetTable(std::size_t generators, std::size_t cosets, std::vector<std::int32_t> action, bool complete)
    : generators_(generators), cosets_(cosets), action_(std::move(action)), complete_(complete) {}

std::int32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  auto c = static_cast<std::int32_t>(coset);
  for (std::uint32_t letter : w.letters()) {
    c = action(static_cast<std::size_t>(c), letter);
    if (c == kUndefined) return kUndefined;
  }
  return c;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t generators, std::size_t max_cosets)
      : cols_(2 * generators), max_cosets_(max_cosets) {
    add_row();
  }

  void run(const std::vector<std::vector<std::uint32_t>>& relators,
           const std::vector<std::vector<std::uint32_t>>& subgroup) {
    for (const auto& w : subgroup) {
      if (alive(0)) scan_and_fill(0, w);
    }
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      if (!alive(alpha)) continue;
      if (parent_.size() > kCompactThreshold && dead_ > live_) alpha = compact(alpha);
      for (const auto& r : relators) {
        if (!alive(alpha)) break;
        scan_and_fill(alpha, r);
      }
      for (std::uint32_t x = 0; x < cols_ && alive(alpha); ++x) {
        if (entry(alpha, x) == CosetTable::kUndefined) define(alpha, x);
      }
    }
  }

  CosetTable finish(std::size_t generators) {
    compact(0);
    for (std::int32_t v : table_) {
      if (v == CosetTable::kUndefined) throw InvariantViolation("coset table incomplete after enumeration");
    }
    return CosetTable(generators, live_, std::move(table_), true);
  }

 private:
  static constexpr std::size_t kCompactThreshold = 1 << 16;

  std::int32_t& entry(std::size_t coset, std::uint32_t letter) { return table_[coset * cols_ + letter]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::size_t add_row() {
    const std::size_t c = parent_.size();
    table_.resize(table_.size() + cols_, CosetTable::kUndefined);
    parent_.push_back(static_cast<std::int32_t>(c));
    ++live_;
    return c;
  }

  void define(std::size_t alpha, std::uint32_t x) {
    if (live_ >= max_cosets_) {
      throw ResourceLimitError("coset enumeration exceeded " + std::to_string(max_cosets_) + " live cosets");
    }
    const std::size_t beta = add_row();
    entry(alpha, x) = static_cast<std::int32_t>(beta);
    entry(beta, x ^ 1U) = static_cast<std::int32_t>(alpha);
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const std::int32_t next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(std::int32_t k, std::int32_t l) {
    const std::int32_t a = rep(k);
    const std::int32_t b = rep(l);
    if (a == b) return;
    const std::int32_t lo = std::min(a, b);
    const std::int32_t hi = std::max(a, b);
    parent_[hi] = lo;
    --live_;
    ++dead_;
    queue_.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::int32_t gamma = queue_[i];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::int32_t delta = entry(gamma, x);
        if (delta == CosetTable::kUndefined) continue;
        entry(delta, x ^ 1U) = CosetTable::kUndefined;
        const std::int32_t mu = rep(gamma);
        const std::int32_t nu = rep(delta);
        if (entry(mu, x) != CosetTable::kUndefined) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, x ^ 1U) != CosetTable::kUndefined) {
          merge(mu, entry(nu, x ^ 1U));
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1U) = mu;
        }
      }
    }
    queue_.clear();
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    const auto a = static_cast<std::int32_t>(alpha);
    std::int32_t f = a;
    std::int32_t b = a;
    std::size_t i = 0;
    std::size_t j = w.size();  // backward cursor is one past the next letter
    while (true) {
      while (i < w.size() && entry(f, w[i]) != CosetTable::kUndefined) f = entry(f, w[i++]);
      if (i == w.size()) {
        if (f != a) coincidence(f, a);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1U) != CosetTable::kUndefined) {
        b = entry(b, w[j - 1] ^ 1U);
        --j;
      }
      if (j < i + 1) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, w[i] ^ 1U) = f;
        return;
      }
      define(static_cast<std::size_t>(f), w[i]);
    }
  }

  // Renumbers live cosets densely in index order; returns the new index of
  // `keep`.
  std::size_t compact(std::size_t keep) {
    std::vector<std::int32_t> renumber(parent_.size(), CosetTable::kUndefined);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(c)) renumber[c] = next++;
    }
    std::vector<std::int32_t> table(static_cast<std::size_t>(next) * cols_, CosetTable::kUndefined);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::int32_t v = entry(c, x);
        if (v == CosetTable::kUndefined) continue;
        if (renumber[v] == CosetTable::kUndefined) throw InvariantViolation("live coset points at a dead coset");
        table[static_cast<std::size_t>(renumber[c]) * cols_ + x] = renumber[v];
      }
    }
    const std::int32_t kept = renumber[keep];
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (std::int32_t c = 0; c < next; ++c) parent_[c] = c;
    dead_ = 0;
    return static_cast<std::size_t>(kept);
  }

  std::uint32_t cols_;
  std::size_t max_cosets_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::size_t live_ = 0;
  std::size_t dead_ = 0;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, std::span<const Word> subgroup_gens, std::size_t max_cosets) {
  p.validate();
  if (p.relators.empty()) throw DomainError("coset enumeration needs at least one relator");
  if (max_cosets == 0) throw DomainError("max_cosets must be positive");
  std::vector<std::vector<std::uint32_t>> rels;
  for (const auto& r : p.relators) rels.push_back(r.letters());
  std::vector<std::vector<std::uint32_t>> subs;
  for (const auto& w : subgroup_gens) {
    if (w.generator_bound() > p.generator_count()) throw DomainError("subgroup generator uses an unknown generator");
    subs.push_back(w.letters());
  }
  Enumerator e(p.generator_count(), max_cosets);
  e.run(rels, subs);
  return e.finish(p.generator_count());
}

Group to_permutation_group(const CosetTable& t, std::size_t closure_cap) {
  if (!t.complete()) throw DomainError("coset table is incomplete");
  std::vector<Perm> gens;
  for (std::uint32_t g = 0; g < t.num_generators(); ++g) {
    Perm perm(t.num_cosets());
    for (std::size_t c = 0; c < t.num_cosets(); ++c) perm[c] = static_cast<Point>(t.apply(c, g));
    gens.push_back(std::move(perm));
  }
  return Group::closure(t.num_cosets(), gens, closure_cap);
}

}  // namespace cyclic
