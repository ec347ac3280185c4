#include "qpsi/qpoch/formal.hpp"

#include <algorithm>

#include "qpsi/errors.hpp"

namespace qpsi::qpoch {

QLaurentSeries poch_finite(const ContextPtr& ctx, const QMonomial& x, int n, int order) {
  FormalProduct p;
  p.mul_poch(x, n);
  return p.expand(ctx, order);
}

QLaurentSeries poch_infinite(const ContextPtr& ctx, const QMonomial& x, int order) {
  if (x.qexp < 0) throw NonPositiveQOrder("(x)_inf needs x of q-order >= 0, got " + std::to_string(x.qexp));
  FormalProduct p;
  p.mul_poch_infinite(x);
  return p.expand(ctx, order);
}

QLaurentSeries poch_infinite(const QLaurentSeries& x, int order) {
  if (x.valuation() < 0) throw NonPositiveQOrder("(x)_inf needs x of q-order >= 0");
  const auto& ctx = x.context();
  order = std::min(order, x.order());
  QLaurentSeries acc = QLaurentSeries::one(ctx, order);
  const QLaurentSeries one = QLaurentSeries::one(ctx, order);
  for (int k = 0; k < order; ++k) {
    QLaurentSeries xk = x.shifted(QMonomial::q_power(k)).truncated(order);
    if (xk.valuation() >= order) break;
    acc = acc * (one - xk);
  }
  return acc.truncated(order);
}

QLaurentSeries theta(const ContextPtr& ctx, const QMonomial& z, int order) {
  if (z.is_zero()) throw ZeroDivisor("theta(0)");
  if (z.qexp < 0 || z.qexp > 1) {
    throw NonPositiveQOrder("theta(z) needs z and q/z of q-order >= 0, got q^" + std::to_string(z.qexp));
  }
  FormalProduct p;
  p.mul_poch_infinite(z);
  p.mul_poch_infinite(QMonomial::q_power(1) * z.inverse());
  p.mul_poch_infinite(QMonomial::q_power(1));
  return p.expand(ctx, order);
}

}  // namespace qpsi::qpoch
