#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclic/catalog.hpp"
#include "cyclic/corpus.hpp"

namespace cyclic {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string check_id;
  std::string subject;
  CheckStatus status = CheckStatus::pass;
  std::string reason;    // why a check was skipped
  std::string expected;  // always set for pass and fail
  std::string actual;
  double elapsed_ms = 0.0;

  // "pass", "fail" or "skipped(<reason>)"
  std::string status_text() const;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  std::string version;
  std::string corpus_sha256;
  std::vector<CheckResult> checks;  // sorted by (check_id, subject)
  ReportSummary summary;

  bool all_passed() const { return summary.fail == 0; }
};

// Sorts the results and tallies the summary.
Report make_report(std::vector<CheckResult> checks, std::string corpus_sha256);

// Closed-form grid: dihedral/quaternion n = 3..nmax+2 (quasidihedral from
// n = 4), and for every prime p <= pmax and n = 3..nmax the families
// cyclic, elem_abelian, cp_x_cpn1 and modular (modular for p = 2 from
// n = 4).
std::vector<FamilySpec> closed_form_grid(std::uint64_t pmax = 5, unsigned nmax = 5);

// Each grid spec is built and both census routes are compared with the
// closed form.
std::vector<CheckResult> verify_closed_forms(const std::vector<FamilySpec>& grid,
                                             std::size_t max_cosets = kDefaultMaxCosets);

// Second minimum of alpha over non-cyclic groups of order p^n: one result
// per corpus group plus one aggregate per order. Orders whose corpus is a
// certified complete classification (8, 16 and p^3) are reported as
// exhaustive; every other order is labelled restricted-corpus.
std::vector<CheckResult> verify_second_minimum(const Corpus& corpus);

// |C(G)| > (n-1)p + 2 for non-cyclic groups with n >= 4 and exp(G) <= p^{n-2}.
std::vector<CheckResult> verify_low_exponent_bound(const Corpus& corpus);

// Odd p, exp(G) != p, Omega_1(G) != G: |C(G)| <= 2p^{n-2}+...+p+2 with
// equality exactly when exp(G) = p^2 and Omega_1 is the solution set of
// x^p = 1 and has index p. Also checks the c_1 census bound (tight iff
// exp = p^2), the c_1 cap for proper Omega_1, and for p = 2 the maximum of
// alpha at D_8 x C_2^{n-3} among groups of exponent > 2.
std::vector<CheckResult> verify_second_maximum(const Corpus& corpus);

// p = 3, exp(G) != 3: 2c_1 <= 7*3^{n-2} - 1 and |C(G)| <= (23*3^{n-3}+1)/2,
// equality exactly for groups tagged `p3_extremal`.
std::vector<CheckResult> verify_p3_bounds(const Corpus& corpus);

// Per-group properties: order certification, census oracle agreement,
// partition identity, Miller congruence, Richards bound, alpha extremes,
// maximal-subgroup decomposition, Frattini routes, Omega_1 = G => G' =
// Phi(G), and exp(Omega_1) = p for odd p and class <= 2.
std::vector<CheckResult> verify_global_properties(const Corpus& corpus);

// Identifiers accepted by `cyccen verify`.
inline constexpr const char* kSelectors[] = {"all", "eq1", "thm23", "lemma22", "thm31", "p3", "global"};

struct VerifyOptions {
  std::string selector = "all";
  std::uint64_t grid_pmax = 5;
  unsigned grid_nmax = 5;
  std::size_t max_cosets = kDefaultMaxCosets;
};

// Runs the selected checks; `corpus` may be null when only the closed-form
// grid is selected.
Report run_verification(const VerifyOptions& options, const Corpus* corpus);

}  // namespace cyclic
