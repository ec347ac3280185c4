#pragma once

#include "qpsi/qpoch/formal_product.hpp"

namespace qpsi::qpoch {

// (x)_n for any integer n, known through q^(order-1). For n < 0 this is
// prod_{j=1}^{|n|} (1 - x q^-j)^-1; a vanishing factor throws ZeroDivisor,
// which bilateral sums read as a zero term.
QLaurentSeries poch_finite(const ContextPtr& ctx, const QMonomial& x, int n, int order);

// (x)_inf. NonPositiveQOrder if x has negative q-order.
QLaurentSeries poch_infinite(const ContextPtr& ctx, const QMonomial& x, int order);
// Series argument of valuation >= 0; only factors k < order contribute.
QLaurentSeries poch_infinite(const QLaurentSeries& x, int order);

// theta(z) = (z)_inf (q/z)_inf (q)_inf; z must have q-exponent 0 or 1.
QLaurentSeries theta(const ContextPtr& ctx, const QMonomial& z, int order);

}  // namespace qpsi::qpoch
