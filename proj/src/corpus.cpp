#include "cyclic/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

std::string histogram(const std::vector<std::uint64_t>& values) {
  std::map<std::uint64_t, std::size_t> counts;
  for (auto v : values) ++counts[v];
  std::string out;
  for (const auto& [v, c] : counts) out += std::to_string(v) + ":" + std::to_string(c) + ",";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string invariant_fingerprint(const Group& g, std::uint64_t p) {
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  const Subgroup f = frattini_subgroup(g, p);
  std::vector<std::uint64_t> z_orders;
  for (ElementIndex x : z.elements()) z_orders.push_back(g.element_order(x));
  std::vector<bool> is_power(g.order(), false);
  std::size_t powers = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const ElementIndex y = g.power(static_cast<ElementIndex>(i), static_cast<std::int64_t>(p));
    if (!is_power[y]) {
      is_power[y] = true;
      ++powers;
    }
  }
  std::ostringstream out;
  out << "orders=" << histogram(g.element_orders()) << ";Z=" << histogram(z_orders) << ";D=" << d.order()
      << ";Phi=" << f.order() << ";pow=" << powers << ";max=" << maximal_subgroups(g, p).size();
  return out.str();
}

GroupFacts compute_facts(const Group& g) {
  const auto pp = is_p_group(g);
  if (!pp) throw DomainError("not a p-group");
  GroupFacts f;
  f.pp = *pp;
  f.order = g.order();
  f.census = census_by_sum(g);
  f.census_enumerated = census_by_enumeration(g);
  f.exponent = exponent(g);
  f.omega_set_size = omega1_set(g, pp->p).size();
  const Subgroup omega = omega1_subgroup(g, pp->p);
  f.omega_subgroup_order = omega.order();
  for (ElementIndex x : omega.elements()) f.omega_subgroup_exponent = std::max(f.omega_subgroup_exponent, g.element_order(x));
  const Subgroup derived = derived_subgroup(g);
  const Subgroup phi = frattini_subgroup(g, pp->p);
  const Subgroup z = center(g);
  f.derived_order = derived.order();
  f.frattini_order = phi.order();
  f.center_order = z.order();
  f.maximal_subgroup_count = maximal_subgroups(g, pp->p).size();
  f.abelian = g.is_abelian();
  f.class_at_most_two = std::all_of(derived.elements().begin(), derived.elements().end(),
                                    [&](ElementIndex x) { return z.contains(x); });
  f.derived_equals_frattini = derived == phi;
  f.fingerprint = invariant_fingerprint(g, pp->p);
  return f;
}

CorpusEntry make_entry(Presentation p, std::string file, std::size_t max_cosets) {
  const CosetTable table = coset_enumerate(p, {}, max_cosets);
  Group g = to_permutation_group(table);
  std::optional<GroupFacts> facts;
  if (is_p_group(g)) facts = compute_facts(g);
  return CorpusEntry{std::move(file), std::move(p), std::move(g), std::move(facts)};
}

Corpus load_corpus(const std::filesystem::path& dir, std::size_t max_cosets) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".grp") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  Corpus corpus;
  std::string digest_input;
  for (const auto& path : files) {
    const std::string text = read_file(path);
    const std::string name = path.filename().string();
    digest_input += name;
    digest_input.push_back('\0');
    digest_input += text;
    digest_input.push_back('\0');
    Presentation p;
    try {
      p = parse_presentation(text);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), name + ": " + e.message());
    }
    corpus.entries.push_back(make_entry(std::move(p), name, max_cosets));
  }
  corpus.sha256 = sha256_hex(digest_input);
  return corpus;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace cyclic
