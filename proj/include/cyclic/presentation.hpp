#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/word.hpp"

namespace cyclic {

struct PresentationMeta {
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> expected_order;
  std::optional<std::string> family;

  friend bool operator==(const PresentationMeta&, const PresentationMeta&) = default;
};

// A finite presentation <generators | relators>. Relations L = R are stored
// as the relator L*R^-1.
struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Word> relators;
  PresentationMeta meta;

  std::size_t generator_count() const noexcept { return generators.size(); }

  // Throws DomainError when a relator references an unknown generator,
  // generator names repeat, or expected_order is zero.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Parses the line-oriented `.grp` format:
//
//   group NAME
//   gens IDENT+
//   (order INT | prime INT | family IDENT)*
//   rel EXPR [= EXPR]          (one or more)
//
// EXPR is a `*`-separated product of terms; a term is an atom optionally
// raised to a signed integer power or conjugated by a generator (`a^b`
// means b^-1 a b). Atoms are generators, commutators `[u,v]` = u^-1 v^-1 u v
// and parenthesised expressions. `#` starts a comment.
//
// Throws ParseError (with line and column) on malformed input, unknown
// generators and exponents that overflow.
Presentation parse_presentation(std::string_view text);

// Loads and parses a file. I/O failures raise std::runtime_error.
Presentation load_presentation(const std::string& path);

// Inverse of parse_presentation up to relator normalisation: re-parsing
// the output gives syllable-identical relators.
std::string serialize(const Presentation& p);

}  // namespace cyclic
