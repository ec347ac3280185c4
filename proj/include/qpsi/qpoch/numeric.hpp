#pragma once

#include <functional>

#include "qpsi/numerics/summation.hpp"

namespace qpsi::qpoch {

using numerics::BigComplex;
using numerics::BigFloat;
using numerics::Estimate;

// Finite product (x)_n for integer n; ZeroDivisor when a negative-index
// factor vanishes.
BigComplex poch_finite(const BigComplex& x, long n, const BigFloat& q);
// 1/(x)_n, which is a plain product for n < 0 and so never divides by zero there.
BigComplex poch_finite_reciprocal(const BigComplex& x, long n, const BigFloat& q);

Estimate poch_infinite(const BigComplex& x, const BigFloat& q, const BigFloat& tol);
// (x)_z = (x)_inf / (x q^z)_inf, q^z = exp(z ln q).
Estimate poch_general(const BigComplex& x, const BigComplex& z, const BigFloat& q, const BigFloat& tol);

Estimate theta(const BigComplex& z, const BigFloat& q, const BigFloat& tol);

// Gamma_q(x) = (q)_{x-1} / (1-q)^{x-1}. PoleAtNonPositiveInteger for x in {0,-1,...}.
Estimate q_gamma(const BigFloat& x, const BigFloat& q, const BigFloat& tol);

struct JacksonIntegral {
  Estimate value;
  long lowest_index = 0;
  long highest_index = 0;
};

// (1-q) sum_{n in Z} f(c q^n) c q^n. The ratio bounds majorise consecutive
// summands n -> n+1 (forward) and n -> n-1 (backward).
JacksonIntegral jackson_qintegral(const std::function<BigComplex(const BigComplex&)>& f, const BigComplex& c,
                                  const BigFloat& q, const numerics::RatioBound& forward,
                                  const numerics::RatioBound& backward, const BigFloat& tol);

}  // namespace qpsi::qpoch
