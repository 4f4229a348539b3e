#include "cyclic/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cyclic/catalog.hpp"

namespace cyclic {

namespace {

using Json = nlohmann::ordered_json;

double elapsed(const CheckResult& c, const ReportFormatOptions& options) {
  return options.omit_timings ? 0.0 : c.elapsed_ms;
}

std::string format_ms(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_json(const Report& report, const ReportFormatOptions& options) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"id", c.check_id},
                          {"subject", c.subject},
                          {"status", c.status_text()},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"elapsed_ms", elapsed(c, options)}});
  }
  const Json doc{{"version", report.version},
                 {"corpus_sha256", report.corpus_sha256},
                 {"checks", std::move(checks)},
                 {"summary",
                  {{"pass", report.summary.pass},
                   {"fail", report.summary.fail},
                   {"skipped", report.summary.skipped}}}};
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const Report& report, const ReportFormatOptions& options) {
  std::string out = "id,subject,status,expected,actual,elapsed_ms\n";
  for (const auto& c : report.checks) {
    out += csv_field(c.check_id) + ',' + csv_field(c.subject) + ',' + csv_field(c.status_text()) + ',' +
           csv_field(c.expected) + ',' + csv_field(c.actual) + ',' + format_ms(elapsed(c, options)) + '\n';
  }
  return out;
}

std::string report_to_text(const Report& report, const ReportFormatOptions& options) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << c.status_text() << "  " << c.check_id << "  " << c.subject;
    if (c.status != CheckStatus::skipped) out << "  expected " << c.expected << "  actual " << c.actual;
    if (!options.omit_timings) out << "  (" << format_ms(c.elapsed_ms) << " ms)";
    out << '\n';
  }
  out << "summary: " << report.summary.pass << " pass, " << report.summary.fail << " fail, "
      << report.summary.skipped << " skipped\n";
  return out.str();
}

std::string census_to_json(const std::string& subject, const CyclicCensus& census) {
  const Json doc{{"subject", subject},
                 {"p", census.p},
                 {"n", census.n},
                 {"order", ipow(census.p, census.n)},
                 {"c", census.c},
                 {"total", census.total},
                 {"alpha", to_string(census.alpha)},
                 {"exponent", ipow(census.p, census.exponent_k)}};
  return doc.dump(2) + "\n";
}

}  // namespace cyclic
