#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpsi/algebra/q_series.hpp"
#include "qpsi/numerics/summation.hpp"

namespace qpsi::identities {

enum class Backend { Formal, Numeric };

std::string backend_name(Backend b);

// Outcome of checking one identity instance. Numbers are kept as decimal
// strings so reports serialise without loss.
struct ResidualReport {
  std::string identity;
  std::string instance;
  Backend backend = Backend::Formal;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = false;
  std::string residual;
  std::string certified_error;
  std::string tolerance;
  int order = 0;
  std::optional<int> first_difference;
  std::string offending_coefficient;
  std::string note;
  double wall_time = 0.0;
};

struct NumericConfig {
  int precision = 256;
  std::string tolerance = "1e-25";
};

// Digits used when a residual or error bound is written into a report.
inline constexpr int kReportDigits = 6;

std::string format_number(const numerics::BigFloat& x);
std::string format_number(const numerics::BigComplex& z);

// Exact comparison of two formal sides through q^(order-1).
ResidualReport formal_report(std::string identity, std::string instance, const algebra::QLaurentSeries& lhs,
                             const algebra::QLaurentSeries& rhs, int order);

// |lhs - rhs| against the tolerance; passes only if the residual and the
// combined a-priori error are both below it.
ResidualReport numeric_report(std::string identity, std::string instance, const numerics::Estimate& lhs,
                              const numerics::Estimate& rhs, const numerics::BigFloat& tolerance);

}  // namespace qpsi::identities
