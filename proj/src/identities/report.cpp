#include "qpsi/identities/report.hpp"

namespace qpsi::identities {

std::string backend_name(Backend b) { return b == Backend::Formal ? "formal" : "numeric"; }

std::string format_number(const numerics::BigFloat& x) { return x.str(kReportDigits); }

std::string format_number(const numerics::BigComplex& z) { return z.str(kReportDigits); }

ResidualReport formal_report(std::string identity, std::string instance, const algebra::QLaurentSeries& lhs,
                             const algebra::QLaurentSeries& rhs, int order) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.instance = std::move(instance);
  r.backend = Backend::Formal;
  r.order = order;
  auto cmp = algebra::equal_to_order(lhs, rhs, order);
  r.pass = cmp.equal;
  if (cmp.equal) {
    r.residual = "0";
  } else {
    r.first_difference = cmp.first_difference;
    const auto diff = lhs.coefficient(*cmp.first_difference) - rhs.coefficient(*cmp.first_difference);
    r.offending_coefficient = diff.str(lhs.symbols());
    r.residual = r.offending_coefficient;
  }
  return r;
}

ResidualReport numeric_report(std::string identity, std::string instance, const numerics::Estimate& lhs,
                              const numerics::Estimate& rhs, const numerics::BigFloat& tolerance) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.instance = std::move(instance);
  r.backend = Backend::Numeric;
  const numerics::BigFloat residual = (lhs.value - rhs.value).abs();
  const numerics::BigFloat err = lhs.error + rhs.error;
  r.residual = format_number(residual);
  r.certified_error = format_number(err);
  r.tolerance = format_number(tolerance);
  r.pass = residual < tolerance && err < tolerance;
  return r;
}

}  // namespace qpsi::identities
