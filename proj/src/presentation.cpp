#include "cyclic/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

constexpr std::int64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();
constexpr std::size_t kMaxSyllables = 1'000'000;

enum class Tok { Ident, Int, Minus, Plus, Caret, Star, LBracket, RBracket, LParen, RParen, Comma, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

bool is_generator_name(const std::string& s) {
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty() && std::isalpha(static_cast<unsigned char>(s.front())) != 0;
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Int, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '-': kind = Tok::Minus; break;
      case '+': kind = Tok::Plus; break;
      case '^': kind = Tok::Caret; break;
      case '*': kind = Tok::Star; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

std::int64_t parse_int_literal(const Token& t, std::size_t line_no) {
  if (t.text.size() > 12) throw ParseError(line_no, t.column, "exponent overflow: " + t.text);
  const std::int64_t v = std::stoll(t.text);
  if (v > kMaxExponent) throw ParseError(line_no, t.column, "exponent overflow: " + t.text);
  return v;
}

// Recursive-descent parser over the tokens of one `rel` line.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t pos, std::size_t line_no,
             const std::vector<std::string>& gens)
      : toks_(toks), pos_(pos), line_(line_no), gens_(gens) {}

  Word expr() {
    Word w = term();
    while (peek().kind == Tok::Star) {
      ++pos_;
      w = checked(w * term(), peek());
    }
    return w;
  }

  const Token& peek() const { return toks_[pos_]; }
  std::size_t position() const { return pos_; }

 private:
  const Token& expect(Tok kind, const char* what) {
    const Token& t = toks_[pos_];
    if (t.kind != kind) throw error(t, std::string("expected ") + what);
    ++pos_;
    return t;
  }

  ParseError error(const Token& t, const std::string& msg) const {
    return ParseError(line_, t.column, msg + (t.kind == Tok::End ? " at end of line" : ", found '" + t.text + "'"));
  }

  std::uint32_t generator_index(const Token& t) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i] == t.text) return static_cast<std::uint32_t>(i);
    }
    throw ParseError(line_, t.column, "unknown generator '" + t.text + "'");
  }

  Word checked(Word w, const Token& at) const {
    if (w.size() > kMaxSyllables) throw ParseError(line_, at.column, "exponent overflow: word too long");
    for (const auto& s : w.syllables()) {
      if (s.exponent > kMaxExponent || s.exponent < -kMaxExponent) {
        throw ParseError(line_, at.column, "exponent overflow");
      }
    }
    return w;
  }

  Word term() {
    Word base = atom();
    if (peek().kind != Tok::Caret) return base;
    ++pos_;
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      ++pos_;
      return conjugate(base, Word::generator(generator_index(t)));
    }
    bool negative = false;
    if (t.kind == Tok::Minus || t.kind == Tok::Plus) {
      negative = t.kind == Tok::Minus;
      ++pos_;
    }
    const Token& num = expect(Tok::Int, "integer exponent or generator");
    const std::int64_t k = parse_int_literal(num, line_);
    if (base.size() > 1 && static_cast<std::uint64_t>(base.size()) * static_cast<std::uint64_t>(k) > kMaxSyllables) {
      throw ParseError(line_, num.column, "exponent overflow: word too long");
    }
    return checked(word_power(base, negative ? -k : k), num);
  }

  Word atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        ++pos_;
        return Word::generator(generator_index(t));
      case Tok::LBracket: {
        ++pos_;
        Word u = expr();
        expect(Tok::Comma, "','");
        Word v = expr();
        expect(Tok::RBracket, "']'");
        return checked(commutator(u, v), t);
      }
      case Tok::LParen: {
        ++pos_;
        Word u = expr();
        expect(Tok::RParen, "')'");
        return u;
      }
      default:
        throw error(t, "expected generator, '[' or '('");
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t line_;
  const std::vector<std::string>& gens_;
};

// The group name is the single whitespace-delimited word after `group`.
std::string header_name(std::string_view line, std::size_t line_no) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::istringstream in{std::string(line)};
  std::string keyword, name, extra;
  in >> keyword >> name;
  if (name.empty()) throw ParseError(line_no, line.size() + 1, "expected a group name");
  if (in >> extra) throw ParseError(line_no, line.find(extra) + 1, "unexpected text after group name");
  return name;
}

std::uint64_t parse_meta_int(const std::vector<Token>& toks, std::size_t line_no) {
  if (toks.size() != 3 || toks[1].kind != Tok::Int) {
    throw ParseError(line_no, toks.size() > 1 ? toks[1].column : toks[0].column,
                     "expected a single integer after '" + toks[0].text + "'");
  }
  if (toks[1].text.size() > 18) throw ParseError(line_no, toks[1].column, "integer overflow");
  return std::stoull(toks[1].text);
}

}  // namespace

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!seen.insert(g).second) throw DomainError("duplicate generator '" + g + "'");
  }
  for (const auto& r : relators) {
    if (r.generator_bound() > generators.size()) throw DomainError("relator uses an unknown generator");
  }
  if (meta.expected_order && *meta.expected_order == 0) throw DomainError("expected order must be positive");
}

Presentation parse_presentation(std::string_view text) {
  enum class Stage { Header, Gens, Body };
  Presentation p;
  Stage stage = Stage::Header;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    if (stage == Stage::Header) {
      std::string_view body = line.substr(0, line.find('#'));
      const auto first = body.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      if (body.substr(first, 5) != "group" || (body.size() > first + 5 && !std::isspace(static_cast<unsigned char>(body[first + 5])))) {
        throw ParseError(line_no, first + 1, "expected 'group' header");
      }
      p.name = header_name(line, line_no);
      last_line = line_no;
      stage = Stage::Gens;
      if (end == text.size()) break;
      continue;
    }
    const auto toks = tokenize(line, line_no);
    if (toks.front().kind == Tok::End) continue;
    last_line = line_no;
    const Token& kw = toks.front();
    if (kw.kind != Tok::Ident) throw ParseError(line_no, kw.column, "expected a keyword");

    switch (stage) {
      case Stage::Header:
        break;
      case Stage::Gens:
        if (kw.text != "gens") throw ParseError(line_no, kw.column, "expected 'gens' line");
        for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
          if (toks[i].kind != Tok::Ident || !is_generator_name(toks[i].text)) {
            throw ParseError(line_no, toks[i].column, "expected generator identifier");
          }
          for (const auto& g : p.generators) {
            if (g == toks[i].text) throw ParseError(line_no, toks[i].column, "duplicate generator '" + g + "'");
          }
          p.generators.push_back(toks[i].text);
        }
        if (p.generators.empty()) throw ParseError(line_no, kw.column, "at least one generator required");
        stage = Stage::Body;
        break;
      case Stage::Body:
        if (kw.text == "order" || kw.text == "prime") {
          if (!p.relators.empty()) throw ParseError(line_no, kw.column, "metadata must precede relators");
          const std::uint64_t v = parse_meta_int(toks, line_no);
          if (kw.text == "order") {
            if (v == 0) throw ParseError(line_no, toks[1].column, "order must be positive");
            p.meta.expected_order = v;
          } else {
            if (v < 2) throw ParseError(line_no, toks[1].column, "prime must be at least 2");
            p.meta.prime = v;
          }
        } else if (kw.text == "family") {
          if (!p.relators.empty()) throw ParseError(line_no, kw.column, "metadata must precede relators");
          if (toks.size() != 3 || toks[1].kind != Tok::Ident) {
            throw ParseError(line_no, toks.size() > 1 ? toks[1].column : kw.column, "expected a family identifier");
          }
          p.meta.family = toks[1].text;
        } else if (kw.text == "rel") {
          ExprParser ep(toks, 1, line_no, p.generators);
          Word lhs = ep.expr();
          if (ep.peek().kind == Tok::Equals) {
            ExprParser rp(toks, ep.position() + 1, line_no, p.generators);
            Word rhs = rp.expr();
            if (rp.peek().kind != Tok::End) throw ParseError(line_no, rp.peek().column, "unexpected trailing input");
            lhs = lhs * word_inverse(rhs);
          } else if (ep.peek().kind != Tok::End) {
            throw ParseError(line_no, ep.peek().column, "unexpected trailing input");
          }
          p.relators.push_back(std::move(lhs));
        } else {
          throw ParseError(line_no, kw.column, "unknown keyword '" + kw.text + "'");
        }
        break;
    }
    if (end == text.size()) break;
  }
  if (stage != Stage::Body) throw ParseError(line_no, 1, stage == Stage::Header ? "missing 'group' header" : "missing 'gens' line");
  if (p.relators.empty()) throw ParseError(last_line, 1, "at least one 'rel' line required");
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "group " << p.name << '\n' << "gens";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  if (p.meta.expected_order) out << "order " << *p.meta.expected_order << '\n';
  if (p.meta.prime) out << "prime " << *p.meta.prime << '\n';
  if (p.meta.family) out << "family " << *p.meta.family << '\n';
  for (const auto& r : p.relators) {
    out << "rel ";
    if (r.empty()) {
      out << p.generators.front() << "^0";
    } else {
      out << to_string(r, p.generators);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cyclic
