// cyccen: parse presentations, build groups, compute cyclic-subgroup
// censuses and run the verification suite.
//
// Exit codes: 0 = success (all checks pass or skip), 1 = some check failed,
// 2 = parse, input or resource error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cyclic/catalog.hpp"
#include "cyclic/census.hpp"
#include "cyclic/corpus.hpp"
#include "cyclic/coset_enum.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/presentation.hpp"
#include "cyclic/report.hpp"
#include "cyclic/verify.hpp"

namespace {

using namespace cyclic;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct NamedGroup {
  std::string name;
  Group group;
};

bool looks_like_file(const std::string& arg) {
  return std::filesystem::exists(arg) || std::filesystem::path(arg).extension() == ".grp";
}

NamedGroup load_group(const std::string& arg, std::size_t max_cosets) {
  if (looks_like_file(arg)) {
    const Presentation p = load_presentation(arg);
    return {p.name, to_permutation_group(coset_enumerate(p, {}, max_cosets))};
  }
  const FamilySpec spec = parse_family_spec(arg);
  return {to_string(spec), build(spec, max_cosets)};
}

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("CYCLIC_CENSUS_MAX_COSETS")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const unsigned long long v = std::stoull(text, &used);
      if (used == text.size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("CYCLIC_CENSUS_MAX_COSETS is not a positive integer: ") + env);
  }
  return kDefaultMaxCosets;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic-subgroup census toolkit for finite p-groups"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_cosets_flag;
  app.add_option("--max-cosets", max_cosets_flag, "Coset enumeration cap (overrides CYCLIC_CENSUS_MAX_COSETS)")
      ->check(CLI::PositiveNumber);

  std::string parse_file;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a .grp file and print its normalised form");
  parse_cmd->add_option("file", parse_file, "Presentation file")->required();

  std::string build_arg;
  auto* build_cmd = app.add_subcommand("build", "Enumerate a presentation or family spec");
  build_cmd->add_option("source", build_arg, "A .grp file or a family spec such as modular:p=3,n=4")->required();

  std::string census_arg;
  bool census_json = false;
  auto* census_cmd = app.add_subcommand("census", "Cyclic-subgroup census of a p-group");
  census_cmd->add_option("source", census_arg, "A .grp file or a family spec")->required();
  census_cmd->add_flag("--json", census_json, "Emit JSON");

  VerifyOptions vopts;
  std::string corpus_dir = "corpus";
  std::string grid_text;
  bool verify_json = false;
  bool verify_csv = false;
  bool no_timings = false;
  std::string output_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks");
  verify_cmd->add_option("selector", vopts.selector, "Check group")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSelectors), std::end(kSelectors))))
      ->default_val("all");
  verify_cmd->add_option("--corpus", corpus_dir, "Directory of .grp files")->default_val("corpus");
  verify_cmd->add_option("--grid", grid_text, "Closed-form grid bounds as pmax,nmax (default 5,5)");
  auto* json_flag = verify_cmd->add_flag("--json", verify_json, "Emit the JSON report");
  verify_cmd->add_flag("--csv", verify_csv, "Emit the CSV report")->excludes(json_flag);
  verify_cmd->add_flag("--no-timings", no_timings, "Write 0 for every elapsed_ms field");
  verify_cmd->add_option("-o,--output", output_path, "Write the report to a file instead of stdout");

  for (auto* sub : {build_cmd, census_cmd, verify_cmd}) {
    sub->add_option("--max-cosets", max_cosets_flag, "Coset enumeration cap")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const std::size_t max_cosets = max_cosets_flag ? *max_cosets_flag : default_max_cosets();

    if (*parse_cmd) {
      std::cout << serialize(load_presentation(parse_file));
      return kExitOk;
    }
    if (*build_cmd) {
      const NamedGroup g = load_group(build_arg, max_cosets);
      std::cout << g.name << ": order " << g.group.order() << ", degree " << g.group.degree() << ", "
                << g.group.generators().size() << " generators\n";
      return kExitOk;
    }
    if (*census_cmd) {
      const NamedGroup g = load_group(census_arg, max_cosets);
      const CyclicCensus c = census_by_sum(g.group);
      if (census_json) {
        std::cout << census_to_json(g.name, c);
      } else {
        std::cout << g.name << ": order " << ipow(c.p, c.n) << ", |C(G)| = " << c.total << ", alpha = "
                  << to_string(c.alpha) << "\n";
        for (unsigned k = 0; k < c.c.size(); ++k) std::cout << "  c_" << k << " = " << c.c[k] << "\n";
      }
      return kExitOk;
    }
    // verify
    if (!grid_text.empty()) {
      const auto comma = grid_text.find(',');
      if (comma == std::string::npos) throw DomainError("--grid expects pmax,nmax");
      vopts.grid_pmax = std::stoull(grid_text.substr(0, comma));
      vopts.grid_nmax = static_cast<unsigned>(std::stoul(grid_text.substr(comma + 1)));
    }
    vopts.max_cosets = max_cosets;
    std::optional<Corpus> corpus;
    if (vopts.selector != "eq1") corpus = load_corpus(corpus_dir, max_cosets);
    const Report report = run_verification(vopts, corpus ? &*corpus : nullptr);
    const ReportFormatOptions fmt{no_timings};
    write_output(verify_json  ? report_to_json(report, fmt)
                 : verify_csv ? report_to_csv(report, fmt)
                              : report_to_text(report, fmt),
                 output_path);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
