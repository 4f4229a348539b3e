#pragma once

#include <string>

#include "cyclic/census.hpp"
#include "cyclic/verify.hpp"

namespace cyclic {

struct ReportFormatOptions {
  // Zero every elapsed_ms field so that repeated runs are byte-identical.
  bool omit_timings = false;
};

// {version, corpus_sha256, checks:[{id, subject, status, expected, actual,
// elapsed_ms}], summary:{pass, fail, skipped}}, two-space indented.
std::string report_to_json(const Report& report, const ReportFormatOptions& options = {});

// Header `id,subject,status,expected,actual,elapsed_ms`, RFC 4180 quoting.
std::string report_to_csv(const Report& report, const ReportFormatOptions& options = {});

// One line per check plus a summary line.
std::string report_to_text(const Report& report, const ReportFormatOptions& options = {});

// {p, n, order, c:[...], total, alpha:"num/den", exponent}
std::string census_to_json(const std::string& subject, const CyclicCensus& census);

}  // namespace cyclic
