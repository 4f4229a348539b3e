#include "cyclic/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace cyclic {

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

Word Word::generator(std::uint32_t g, std::int64_t exponent) {
  if (exponent == 0) return Word{};
  return Word(std::vector<Syllable>{{g, exponent}});
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::uint64_t>(std::llabs(s.exponent));
  return n;
}

std::uint32_t Word::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const auto& s : syllables_) bound = std::max(bound, s.generator + 1);
  return bound;
}

std::vector<std::uint32_t> Word::letters() const {
  std::vector<std::uint32_t> out;
  out.reserve(length());
  for (const auto& s : syllables_) {
    const std::uint32_t col = 2 * s.generator + (s.exponent < 0 ? 1 : 0);
    out.insert(out.end(), static_cast<std::size_t>(std::llabs(s.exponent)), col);
  }
  return out;
}

Word free_reduce(std::span<const Syllable> syllables) {
  // Stack-based: each incoming syllable either merges with the top or is
  // pushed; a merge to zero pops, exposing the previous top for the next
  // merge.
  std::vector<Syllable> stack;
  stack.reserve(syllables.size());
  for (const auto& s : syllables) {
    if (s.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == s.generator) {
      stack.back().exponent += s.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

Word free_reduce(const Word& w) { return free_reduce(std::span<const Syllable>(w.syllables())); }

Word word_inverse(const Word& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return Word(std::move(out));
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Syllable> joined = u.syllables();
  joined.insert(joined.end(), v.syllables().begin(), v.syllables().end());
  return free_reduce(joined);
}

Word word_power(const Word& w, std::int64_t k) {
  if (k == 0 || w.empty()) return Word{};
  if (w.size() == 1) {
    const auto& s = w.syllables().front();
    return Word::generator(s.generator, s.exponent * k);
  }
  const Word base = k > 0 ? w : word_inverse(w);
  const std::int64_t times = k > 0 ? k : -k;
  std::vector<Syllable> joined;
  joined.reserve(base.size() * static_cast<std::size_t>(times));
  for (std::int64_t i = 0; i < times; ++i) {
    joined.insert(joined.end(), base.syllables().begin(), base.syllables().end());
  }
  return free_reduce(joined);
}

Word commutator(const Word& x, const Word& y) {
  return word_inverse(x) * word_inverse(y) * x * y;
}

Word conjugate(const Word& x, const Word& y) { return word_inverse(y) * x * y; }

std::string to_string(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& s = w.syllables()[i];
    if (i > 0) out += '*';
    out += s.generator < names.size() ? names[s.generator] : "g" + std::to_string(s.generator);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace cyclic
