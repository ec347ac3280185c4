#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpsi/identities/report.hpp"
#include "qpsi/number_theory/squares.hpp"

namespace qpsi::cli {

using identities::ResidualReport;

// {"schema": 1, "reports": [...]}, numbers as decimal strings. wall_time is
// written only when `timing` is set, so default output is reproducible.
std::string reports_to_json(const std::vector<ResidualReport>& reports, bool timing = false);
// Header row plus one RFC-4180 record per report, CRLF line ends.
std::string reports_to_csv(const std::vector<ResidualReport>& reports, bool timing = false);
std::string reports_to_text(const std::vector<ResidualReport>& reports, bool timing = false);

// Inverse of reports_to_json. InvalidArgument on a malformed document or a
// schema other than 1.
std::vector<ResidualReport> reports_from_json(const std::string& text);

std::string csv_field(const std::string& s);

struct SquaresRow {
  long n = 0;
  number_theory::Count enumeration = 0;
  std::optional<number_theory::Count> formula;
  number_theory::Count generating_function = 0;
  bool match = false;
};

// s in {1, 2, 3, 4, 6}; InvalidArgument otherwise.
std::vector<SquaresRow> squares_table(int s, long max_n);
std::string squares_to_csv(const std::vector<SquaresRow>& rows);
std::string squares_to_json(int s, const std::vector<SquaresRow>& rows);
std::string squares_to_text(int s, const std::vector<SquaresRow>& rows);

}  // namespace qpsi::cli
