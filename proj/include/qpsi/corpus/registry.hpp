#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qpsi/identities/report.hpp"

namespace qpsi::corpus {

using identities::ResidualReport;

enum class BackendSelection { Formal, Numeric, Both };

struct RunConfig {
  BackendSelection backend = BackendSelection::Both;
  int order = 30;
  int precision = 256;
  std::string tolerance = "1e-25";
  std::uint64_t seed = 1;
};

// N >= 1, precision >= 64, tolerance a positive decimal. InvalidArgument otherwise.
void validate(const RunConfig& c);

struct IdentityEntry {
  std::string name;
  std::string summary;
  // Either may be empty when the identity has no such backend.
  std::function<std::vector<ResidualReport>(const RunConfig&)> formal;
  std::function<std::vector<ResidualReport>(const RunConfig&)> numeric;
};

// All identities in a fixed order.
const std::vector<IdentityEntry>& registry();
std::vector<std::string> identity_names();
// UnknownIdentity if absent.
const IdentityEntry& find_identity(const std::string& name);

// Runs the selected identities in the given order, formal instances before
// numeric ones for each identity. Library errors raised by an instance are
// turned into failing reports carrying the error text in `note`.
std::vector<ResidualReport> corpus_run(const std::vector<std::string>& names, const RunConfig& config);

bool all_pass(const std::vector<ResidualReport>& reports);

}  // namespace qpsi::corpus
