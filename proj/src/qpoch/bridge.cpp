#include "qpsi/qpoch/bridge.hpp"

#include "qpsi/errors.hpp"

namespace qpsi::qpoch {

using numerics::BigComplex;

BigComplex evaluate(const algebra::LaurentPoly& p, const algebra::SymbolTable& symbols, const SymbolValues& values) {
  std::vector<BigComplex> vals;
  vals.reserve(symbols.size());
  for (const auto& name : symbols.names()) {
    auto it = values.find(name);
    vals.push_back(it == values.end() ? BigComplex(0L) : it->second);
  }
  BigComplex acc(0L);
  for (const auto& t : p.terms()) {
    BigComplex term(t.coeff);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      const int d = t.mono.degree_in(i);
      if (d == 0) continue;
      if (!values.contains(symbols.name(i))) throw SymbolMismatch("no value for symbol " + symbols.name(i));
      term *= numerics::pow(vals[i], static_cast<long>(d));
    }
    acc += term;
  }
  return acc;
}

BigComplex evaluate(const algebra::QLaurentSeries& s, const SymbolValues& values, const numerics::BigFloat& q) {
  BigComplex acc(0L);
  for (int k = s.floor(); k < s.order(); ++k) {
    const auto& c = s.coefficient(k);
    if (c.is_zero()) continue;
    acc += evaluate(c, s.symbols(), values) * BigComplex(numerics::pow(q, static_cast<long>(k)));
  }
  return acc;
}

}  // namespace qpsi::qpoch
