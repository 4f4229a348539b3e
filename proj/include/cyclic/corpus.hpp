#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/census.hpp"
#include "cyclic/coset_enum.hpp"
#include "cyclic/group.hpp"
#include "cyclic/presentation.hpp"

namespace cyclic {

// Structural data derived once per p-group and shared by all checks.
struct GroupFacts {
  PrimePower pp;
  std::uint64_t order = 0;
  CyclicCensus census;              // census_by_sum
  CyclicCensus census_enumerated;   // census_by_enumeration
  std::uint64_t exponent = 1;
  std::size_t omega_set_size = 0;   // |{x : x^p = 1}|
  std::size_t omega_subgroup_order = 0;
  std::uint64_t omega_subgroup_exponent = 1;
  std::size_t derived_order = 0;
  std::size_t frattini_order = 0;
  std::size_t center_order = 0;
  std::size_t maximal_subgroup_count = 0;
  bool abelian = false;
  bool class_at_most_two = false;   // G' <= Z(G)
  bool derived_equals_frattini = false;
  // Isomorphism invariant used to certify that corpus groups of one order
  // are pairwise non-isomorphic.
  std::string fingerprint;

  bool cyclic() const { return exponent == order; }
};

GroupFacts compute_facts(const Group& g);

std::string invariant_fingerprint(const Group& g, std::uint64_t p);

struct CorpusEntry {
  std::string file;  // file name within the corpus directory
  Presentation presentation;
  Group group;
  std::optional<GroupFacts> facts;  // absent when the group is not a p-group

  const std::string& name() const { return presentation.name; }
  std::string family() const { return presentation.meta.family.value_or(""); }
};

struct Corpus {
  std::vector<CorpusEntry> entries;  // sorted by file name
  std::string sha256;                // over (file name, contents) pairs in that order
};

// Enumerates a presentation over the trivial subgroup and derives facts.
CorpusEntry make_entry(Presentation p, std::string file, std::size_t max_cosets = kDefaultMaxCosets);

// Loads every `*.grp` file in `dir`. Parse and resource errors propagate.
Corpus load_corpus(const std::filesystem::path& dir, std::size_t max_cosets = kDefaultMaxCosets);

std::string sha256_hex(std::string_view data);

}  // namespace cyclic
