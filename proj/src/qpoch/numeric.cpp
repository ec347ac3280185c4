#include "qpsi/qpoch/numeric.hpp"

#include "qpsi/errors.hpp"

namespace qpsi::qpoch {

namespace {

void check_q(const BigFloat& q) {
  if (!(q.sign() > 0 && q < BigFloat(1L))) throw Error("q must lie in (0, 1)");
}

}  // namespace

BigComplex poch_finite(const BigComplex& x, long n, const BigFloat& q) {
  check_q(q);
  BigComplex acc(1L);
  if (n >= 0) {
    BigComplex xq = x;
    for (long j = 0; j < n; ++j, xq *= BigComplex(q)) acc *= BigComplex(1L) - xq;
    return acc;
  }
  const BigComplex qinv(BigFloat(1L) / q);
  BigComplex xq = x * qinv;
  for (long j = 1; j <= -n; ++j, xq *= qinv) {
    BigComplex f = BigComplex(1L) - xq;
    if (f.is_zero()) throw ZeroDivisor("(x)_n with a vanishing factor at j=" + std::to_string(j));
    acc *= f;
  }
  return BigComplex(1L) / acc;
}

BigComplex poch_finite_reciprocal(const BigComplex& x, long n, const BigFloat& q) {
  check_q(q);
  if (n >= 0) {
    BigComplex p = poch_finite(x, n, q);
    if (p.is_zero()) throw ZeroDivisor("1/(x)_n with a vanishing factor");
    return BigComplex(1L) / p;
  }
  BigComplex acc(1L);
  const BigComplex qinv(BigFloat(1L) / q);
  BigComplex xq = x * qinv;
  for (long j = 1; j <= -n; ++j, xq *= qinv) acc *= BigComplex(1L) - xq;
  return acc;
}

Estimate poch_infinite(const BigComplex& x, const BigFloat& q, const BigFloat& tol) {
  return numerics::eval_poch_infinite(x, q, tol);
}

Estimate poch_general(const BigComplex& x, const BigComplex& z, const BigFloat& q, const BigFloat& tol) {
  check_q(q);
  Estimate num = numerics::eval_poch_infinite(x, q, tol);
  Estimate den = numerics::eval_poch_infinite(x * numerics::qpow(q, z), q, tol);
  return num / den;
}

Estimate theta(const BigComplex& z, const BigFloat& q, const BigFloat& tol) {
  if (z.is_zero()) throw ZeroDivisor("theta(0)");
  Estimate a = numerics::eval_poch_infinite(z, q, tol);
  Estimate b = numerics::eval_poch_infinite(BigComplex(q) / z, q, tol);
  Estimate c = numerics::eval_poch_infinite(BigComplex(q), q, tol);
  return a * b * c;
}

Estimate q_gamma(const BigFloat& x, const BigFloat& q, const BigFloat& tol) {
  check_q(q);
  if (x.is_integer() && x.sign() <= 0) throw PoleAtNonPositiveInteger("Gamma_q has a pole at " + x.str(10));
  const BigFloat one(1L);
  const BigFloat xm1 = x - one;
  Estimate poch = poch_general(BigComplex(q), BigComplex(xm1), q, tol);
  BigFloat scale = pow(one - q, -xm1);
  return numerics::scale(poch, BigComplex(scale));
}

JacksonIntegral jackson_qintegral(const std::function<BigComplex(const BigComplex&)>& f, const BigComplex& c,
                                  const BigFloat& q, const numerics::RatioBound& forward,
                                  const numerics::RatioBound& backward, const BigFloat& tol) {
  check_q(q);
  const BigFloat one(1L);
  if (!(forward.ratio < one) || !(backward.ratio < one)) {
    throw NonConvergentTail("Jackson integral needs ratio bounds below 1");
  }
  auto term = [&](long n) {
    BigComplex t = c * BigComplex(pow(q, n));
    return f(t) * t;
  };
  // Tails below tol/10 on each side: eval_bilateral stops at a quarter of the
  // tolerance it is handed.
  const BigFloat inner_tol = tol * BigFloat(4L) / BigFloat(10L);
  numerics::BilateralSum s = numerics::eval_bilateral(term, forward, backward, inner_tol);
  JacksonIntegral out;
  out.value = numerics::scale(s.sum, BigComplex(one - q));
  out.lowest_index = s.lowest_index;
  out.highest_index = s.highest_index;
  return out;
}

}  // namespace qpsi::qpoch
