#include "qpsi/qpoch/formal_product.hpp"

#include <algorithm>

#include "qpsi/errors.hpp"

namespace qpsi::qpoch {

using algebra::GaussianRational;

void FormalProduct::mul_monomial(const QMonomial& m) {
  if (m.is_zero()) zero_ = true;
  if (zero_) return;
  prefactor_ = prefactor_ * m;
}

void FormalProduct::mul_binomial(const QMonomial& y) {
  if (zero_ || y.is_zero()) return;
  if (y.qexp > 0) {
    numer_.push_back(y);
  } else if (y.qexp == 0) {
    if (y.mono.is_one()) {
      GaussianRational c = GaussianRational(1) - y.coeff;
      if (c.is_zero()) {
        zero_ = true;
        return;
      }
      prefactor_.coeff *= c;
    } else if (auto it = std::find(pending_.begin(), pending_.end(), y); it != pending_.end()) {
      pending_.erase(it);
    } else {
      numer_.push_back(y);
    }
  } else {
    prefactor_ = prefactor_ * QMonomial{-y.coeff, y.mono, y.qexp};
    numer_.push_back(y.inverse());
  }
}

void FormalProduct::div_binomial(const QMonomial& y) {
  if (y.is_zero()) return;
  if (y.qexp > 0) {
    denom_.push_back(y);
  } else if (y.qexp == 0) {
    if (!y.mono.is_one()) {
      if (auto it = std::find(numer_.begin(), numer_.end(), y); it != numer_.end()) {
        numer_.erase(it);
      } else {
        pending_.push_back(y);
      }
      return;
    }
    GaussianRational c = GaussianRational(1) - y.coeff;
    if (c.is_zero()) throw ZeroDivisor("division by a vanishing factor (1 - 1)");
    prefactor_.coeff /= c;
  } else {
    prefactor_ = prefactor_ * QMonomial{-y.coeff, y.mono, y.qexp}.inverse();
    denom_.push_back(y.inverse());
  }
}

void FormalProduct::mul_poch(const QMonomial& x, int n) {
  if (n >= 0) {
    for (int j = 0; j < n; ++j) mul_binomial(x.times_q(j));
  } else {
    for (int j = 1; j <= -n; ++j) div_binomial(x.times_q(-j));
  }
}

void FormalProduct::div_poch(const QMonomial& x, int n) {
  if (n >= 0) {
    for (int j = 0; j < n; ++j) div_binomial(x.times_q(j));
  } else {
    for (int j = 1; j <= -n; ++j) mul_binomial(x.times_q(-j));
  }
}

void FormalProduct::mul_poch_infinite(const QMonomial& x) {
  if (x.is_zero()) return;
  int k = 0;
  for (; x.qexp + k <= 0; ++k) mul_binomial(x.times_q(k));
  if (!zero_) numer_inf_.push_back(x.times_q(k));
}

void FormalProduct::div_poch_infinite(const QMonomial& x) {
  if (x.is_zero()) return;
  int k = 0;
  for (; x.qexp + k <= 0; ++k) div_binomial(x.times_q(k));
  denom_inf_.push_back(x.times_q(k));
}

void FormalProduct::mul(const FormalProduct& o) {
  if (o.zero_) zero_ = true;
  if (zero_) return;
  prefactor_ = prefactor_ * o.prefactor_;
  for (const auto& y : o.numer_) mul_binomial(y);
  for (const auto& y : o.pending_) div_binomial(y);
  denom_.insert(denom_.end(), o.denom_.begin(), o.denom_.end());
  numer_inf_.insert(numer_inf_.end(), o.numer_inf_.begin(), o.numer_inf_.end());
  denom_inf_.insert(denom_inf_.end(), o.denom_inf_.begin(), o.denom_inf_.end());
}

void FormalProduct::require_unit_denominators() const {
  if (!pending_.empty()) {
    throw NonInvertibleLeadingCoefficient("denominator factor (1 - y) with q-free non-scalar y has no inverse");
  }
}

std::optional<int> FormalProduct::valuation() const {
  if (zero_) return std::nullopt;
  require_unit_denominators();
  return prefactor_.qexp;
}

QLaurentSeries FormalProduct::expand(const ContextPtr& ctx, int order) const {
  if (zero_) return QLaurentSeries::zero(ctx, order);
  require_unit_denominators();
  const int precision = order - prefactor_.qexp;
  if (precision <= 0) return QLaurentSeries::zero(ctx, order);
  QLaurentSeries s = QLaurentSeries::one(ctx, precision);
  // Divisions first: they only touch coefficients at or above the factor's
  // q-exponent, so the running series stays small while it is sparse.
  for (const auto& y : denom_) {
    if (y.qexp < precision) s.div_binomial(y);
  }
  for (const auto& x : denom_inf_) {
    for (QMonomial y = x; y.qexp < precision; y = y.times_q(1)) s.div_binomial(y);
  }
  for (const auto& y : numer_) {
    if (y.qexp < precision) s.mul_binomial(y);
  }
  for (const auto& x : numer_inf_) {
    for (QMonomial y = x; y.qexp < precision; y = y.times_q(1)) s.mul_binomial(y);
  }
  return s.shifted(prefactor_);
}

}  // namespace qpsi::qpoch
