#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclic {

// One syllable g^e of a word. Exponent is never zero in a reduced word.
struct Syllable {
  std::uint32_t generator = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A word in the free group on the generators of a presentation, stored as
// a sequence of syllables. Words produced by this library are freely
// reduced: adjacent syllables never share a generator. The empty word is
// the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(std::uint32_t g, std::int64_t exponent = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t size() const noexcept { return syllables_.size(); }

  // Sum of |exponent| over syllables, i.e. the letter length.
  std::uint64_t length() const noexcept;

  // Largest generator index used plus one (0 for the empty word).
  std::uint32_t generator_bound() const noexcept;

  // Letter expansion: for syllable g^e emits |e| copies of 2g (e > 0) or
  // 2g+1 (e < 0). This is the column layout of a coset table.
  std::vector<std::uint32_t> letters() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// Merges adjacent same-generator syllables and drops zero exponents,
// cascading through cancellations. Idempotent.
Word free_reduce(std::span<const Syllable> syllables);
Word free_reduce(const Word& w);

Word word_inverse(const Word& w);

// Freely reduced product u * v.
Word operator*(const Word& u, const Word& v);

// w^k for any integer k; w^0 is the empty word.
Word word_power(const Word& w, std::int64_t k);

// x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);

// y^-1 x y
Word conjugate(const Word& x, const Word& y);

// Renders with generator names, e.g. "x^2*y^-1". The empty word renders
// as "1".
std::string to_string(const Word& w, std::span<const std::string> names);

}  // namespace cyclic
