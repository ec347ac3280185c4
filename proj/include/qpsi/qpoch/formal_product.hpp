#pragma once

#include <optional>
#include <vector>

#include "qpsi/algebra/q_series.hpp"

namespace qpsi::qpoch {

using algebra::ContextPtr;
using algebra::QLaurentSeries;
using algebra::QMonomial;

// A product of monomials and binomials (1 - y)^(+-1), kept symbolic until a
// truncation order is known.
//
// Every binomial is normalised on entry so that its own valuation is zero:
// a factor (1 - y) with negative q-exponent is rewritten as
// (-y) * (1 - 1/y). The valuation of the whole product is then exactly the
// q-exponent of the collected monomial prefactor, and expansion never
// creates an intermediate below that valuation.
class FormalProduct {
 public:
  FormalProduct() = default;
  explicit FormalProduct(const QMonomial& prefactor) : prefactor_(prefactor), zero_(prefactor.is_zero()) {}

  void mul_monomial(const QMonomial& m);
  void div_monomial(const QMonomial& m) { mul_monomial(m.inverse()); }

  // * (1 - y)
  void mul_binomial(const QMonomial& y);
  // / (1 - y). ZeroDivisor if the factor is identically zero. A q-free
  // non-scalar factor cancels against an equal numerator factor, taken now
  // or later; one left over makes valuation() and expand() throw
  // NonInvertibleLeadingCoefficient.
  void div_binomial(const QMonomial& y);

  // * (x)_n and / (x)_n for any integer n (bilateral convention).
  void mul_poch(const QMonomial& x, int n);
  void div_poch(const QMonomial& x, int n);

  // * (x)_inf and / (x)_inf. Factors of nonpositive q-exponent are taken
  // explicitly; the rest are expanded lazily up to the requested order.
  void mul_poch_infinite(const QMonomial& x);
  void div_poch_infinite(const QMonomial& x);

  void mul(const FormalProduct& o);

  bool is_zero() const { return zero_; }
  // Exact q-valuation, nullopt for the zero product.
  std::optional<int> valuation() const;

  // Expansion known through q^(order-1).
  QLaurentSeries expand(const ContextPtr& ctx, int order) const;

 private:
  QMonomial prefactor_{};
  bool zero_ = false;
  std::vector<QMonomial> numer_;      // (1 - y), y.qexp >= 0
  std::vector<QMonomial> denom_;      // (1 - y)^-1, y.qexp >= 1
  std::vector<QMonomial> numer_inf_;  // (y)_inf, y.qexp >= 1
  std::vector<QMonomial> denom_inf_;  // (y)_inf^-1, y.qexp >= 1
  std::vector<QMonomial> pending_;    // (1 - y)^-1, y.qexp == 0, not yet cancelled

  void require_unit_denominators() const;
};

}  // namespace qpsi::qpoch
