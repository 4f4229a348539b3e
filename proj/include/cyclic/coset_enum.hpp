#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclic/group.hpp"
#include "cyclic/presentation.hpp"
#include "cyclic/word.hpp"

namespace cyclic {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// Right action of the generators on the cosets of a subgroup. Column 2g
// holds the action of generator g, column 2g+1 that of its inverse.
// Coset 0 is the subgroup itself.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetTable(std::size_t generators, std::size_t cosets, std::vector<std::int32_t> action, bool complete);

  std::size_t num_cosets() const noexcept { return cosets_; }
  std::size_t num_generators() const noexcept { return generators_; }
  bool complete() const noexcept { return complete_; }

  // Image of `coset` under the column `letter` (see class comment);
  // kUndefined when not yet defined.
  std::int32_t action(std::size_t coset, std::uint32_t letter) const {
    return action_[coset * 2 * generators_ + letter];
  }
  std::int32_t apply(std::size_t coset, std::uint32_t generator, bool inverse = false) const {
    return action(coset, 2 * generator + (inverse ? 1 : 0));
  }

  // Follows a word from `coset`; kUndefined if it leaves the defined part.
  std::int32_t trace(std::size_t coset, const Word& w) const;

 private:
  std::size_t generators_;
  std::size_t cosets_;
  std::vector<std::int32_t> action_;
  bool complete_;
};

// Todd-Coxeter coset enumeration (HLT strategy, coincidences via
// union-find, lowest index survives a merge). Returns a complete table whose
// size is the index of <subgroup_gens> in the presented group, compacted to
// 0..n-1 in order of definition. Scans cosets in increasing index and
// relators in presentation order, so the result is deterministic.
//
// Throws ResourceLimitError when the live coset count would exceed
// `max_cosets` and DomainError for an empty relator list.
CosetTable coset_enumerate(const Presentation& p, std::span<const Word> subgroup_gens,
                           std::size_t max_cosets = kDefaultMaxCosets);

// The permutation group generated by the generator columns. Over the
// trivial subgroup this is the regular representation. Throws DomainError
// on an incomplete table.
Group to_permutation_group(const CosetTable& t, std::size_t closure_cap = kDefaultClosureCap);

}  // namespace cyclic
