#pragma once

#include <map>
#include <string>

#include "qpsi/algebra/q_series.hpp"
#include "qpsi/numerics/big_complex.hpp"

namespace qpsi::qpoch {

using SymbolValues = std::map<std::string, numerics::BigComplex>;

numerics::BigComplex evaluate(const algebra::LaurentPoly& p, const algebra::SymbolTable& symbols,
                              const SymbolValues& values);

// Sum of the known coefficients at concrete q and symbol values. The
// truncation error is not bounded here; callers pick the order.
numerics::BigComplex evaluate(const algebra::QLaurentSeries& s, const SymbolValues& values,
                              const numerics::BigFloat& q);

}  // namespace qpsi::qpoch
