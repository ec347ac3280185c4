#include "qpsi/numerics/summation.hpp"

#include <cstdlib>
#include <string>

#include "qpsi/errors.hpp"

namespace qpsi::numerics {

RatioBound find_ratio_bound(const std::function<BigFloat(long)>& bound, const BigFloat& target, long cap) {
  if (!(target < BigFloat(1L)) || target.sign() <= 0) {
    throw DivergentDirection("ratio target " + target.str(6) + " is not in (0,1)");
  }
  for (long n0 = 0; n0 <= cap; ++n0) {
    BigFloat b = bound(n0);
    if (b.is_finite() && b.sign() >= 0 && b <= target) return {n0, target};
  }
  throw DivergentDirection("no geometric ratio bound below " + target.str(6) + " within " + std::to_string(cap) +
                           " terms");
}

Estimate eval_poch_infinite(const BigComplex& a, const BigFloat& q, const BigFloat& tol) {
  if (!(q.sign() > 0 && q < BigFloat(1L))) throw Error("eval_poch_infinite needs 0 < q < 1");
  if (a.is_zero()) return {BigComplex(1L), BigFloat(0L)};
  const BigFloat one(1L);
  const BigFloat abs_a = a.abs();
  BigComplex product(1L);
  BigComplex aqk = a;
  BigFloat mod = abs_a;  // |a| q^k
  constexpr long kMaxFactors = 1000000;
  for (long k = 0; k < kMaxFactors; ++k) {
    BigComplex factor = BigComplex(1L) - aqk;
    if (factor.is_zero()) return {BigComplex(0L), BigFloat(0L)};
    if (factor.abs() < tol) {
      throw FactorNearZero("factor 1 - a q^" + std::to_string(k) + " has modulus " + factor.abs().str(6));
    }
    product *= factor;
    aqk *= BigComplex(q);
    mod *= q;
    if (mod * BigFloat(2L) < one) {
      // sum_{j>k} |a q^j| / (1 - |a q^j|) <= mod / ((1 - q)(1 - mod))
      BigFloat tail = mod / ((one - q) * (one - mod));
      if (tail < tol) {
        BigFloat err = product.abs() * (BigFloat(2L) * tail + BigFloat(4L * (k + 2)) * BigFloat::epsilon());
        return {product, err};
      }
    }
  }
  throw NonConvergentTail("infinite product did not converge within the factor cap");
}

namespace {

struct OneSided {
  BigComplex sum{0L};
  BigFloat max_term{0L};
  long count = 0;
  long last_index = 0;
  TailCertificate cert;
};

// Sums termgen(sign*n) for n = 1, 2, ... until the certified tail is below
// tol/4. `bound.start` is in units of |n|.
OneSided sum_direction(const std::function<BigComplex(long)>& termgen, const RatioBound& bound, int sign,
                       const BigComplex& t0, const BigFloat& tol, long max_terms) {
  if (!(bound.ratio < BigFloat(1L)) || bound.ratio.sign() < 0) {
    throw DivergentDirection("ratio certificate " + bound.ratio.str(6) + " is not below 1");
  }
  const BigFloat one(1L);
  const BigFloat slack = one + BigFloat::pow2(-working_precision() / 2);
  const BigFloat quarter_tol = tol / BigFloat(4L);
  OneSided out;
  BigFloat prev = t0.abs();
  for (long n = 1; n <= max_terms; ++n) {
    BigComplex t = termgen(sign * n);
    BigFloat m = t.abs();
    out.sum += t;
    out.max_term = max(out.max_term, m);
    out.count = n;
    out.last_index = sign * n;
    if (n - 1 >= bound.start && m > prev * bound.ratio * slack) {
      throw CertificateContradicted("observed term ratio exceeds certificate " + bound.ratio.str(6) + " at index " +
                                    std::to_string(sign * n));
    }
    prev = m;
    if (n >= bound.start) {
      TailCertificate cert{n, bound.ratio, m};
      if (cert.tail_bound() < quarter_tol) {
        out.cert = cert;
        return out;
      }
    }
  }
  throw NonConvergentTail("bilateral sum did not reach the tolerance within " + std::to_string(max_terms) + " terms");
}

}  // namespace

BilateralSum eval_bilateral(const std::function<BigComplex(long)>& termgen, const RatioBound& forward,
                            const RatioBound& backward, const BigFloat& tol, long max_terms) {
  BigComplex t0 = termgen(0);
  OneSided fwd = sum_direction(termgen, forward, +1, t0, tol, max_terms);
  OneSided bwd = sum_direction(termgen, backward, -1, t0, tol, max_terms);
  BilateralSum out;
  out.sum.value = t0 + fwd.sum + bwd.sum;
  BigFloat max_term = max(t0.abs(), max(fwd.max_term, bwd.max_term));
  out.sum.error = fwd.cert.tail_bound() + bwd.cert.tail_bound() +
                  max_term * BigFloat(4L * (fwd.count + bwd.count + 1)) * BigFloat::epsilon();
  out.lowest_index = bwd.last_index;
  out.highest_index = fwd.last_index;
  out.forward = fwd.cert;
  out.backward = bwd.cert;
  return out;
}

BilateralSum eval_unilateral(const std::function<BigComplex(long)>& termgen, const RatioBound& forward,
                             const BigFloat& tol, long max_terms) {
  BigComplex t0 = termgen(0);
  OneSided fwd = sum_direction(termgen, forward, +1, t0, tol, max_terms);
  BilateralSum out;
  out.sum.value = t0 + fwd.sum;
  out.sum.error = fwd.cert.tail_bound() + max(t0.abs(), fwd.max_term) * BigFloat(4L * (fwd.count + 1)) *
                                              BigFloat::epsilon();
  out.highest_index = fwd.last_index;
  out.forward = fwd.cert;
  return out;
}

LatticeSum eval_lattice_shells(std::size_t dim, const std::function<BigComplex(const std::vector<long>&)>& term,
                               const BigFloat& tol, long max_radius) {
  LatticeSum out;
  const BigFloat threshold = tol / BigFloat(10L);
  int quiet_shells = 0;
  BigFloat max_term(0L);
  for (long radius = 0; radius <= max_radius; ++radius) {
    BigFloat shell_mass(0L);
    std::vector<long> point(dim, -radius);
    // Walk the box [-radius, radius]^dim and keep the boundary.
    while (true) {
      bool on_shell = radius == 0;
      for (long c : point) on_shell = on_shell || std::labs(c) == radius;
      if (on_shell) {
        BigComplex t = term(point);
        out.sum.value += t;
        BigFloat m = t.abs();
        shell_mass += m;
        max_term = max(max_term, m);
        ++out.points;
      }
      std::size_t i = 0;
      while (i < dim && point[i] == radius) point[i++] = -radius;
      if (i == dim) break;
      ++point[i];
    }
    if (dim == 0) break;
    out.radius = radius;
    quiet_shells = (radius > 0 && shell_mass < threshold) ? quiet_shells + 1 : 0;
    if (quiet_shells >= 2) {
      out.sum.error = shell_mass + max_term * BigFloat(static_cast<long>(4 * out.points)) * BigFloat::epsilon();
      return out;
    }
  }
  if (dim == 0) return out;
  throw NonStabilisedLatticeSum("lattice sum not stable within radius " + std::to_string(max_radius));
}

}  // namespace qpsi::numerics

namespace qpsi::numerics {

Estimate operator*(const Estimate& a, const Estimate& b) {
  return {a.value * b.value, a.error * b.value.abs() + b.error * a.value.abs() + a.error * b.error};
}

Estimate operator/(const Estimate& a, const Estimate& b) {
  const BigFloat mb = b.value.abs();
  if (!(b.error < mb)) throw FactorNearZero("divisor estimate not bounded away from zero");
  // |a/b - A/B| <= (|a| e_b + |b| e_a) / (|b| (|b| - e_b))
  BigFloat err = (a.value.abs() * b.error + mb * a.error) / (mb * (mb - b.error));
  return {a.value / b.value, err};
}

Estimate operator+(const Estimate& a, const Estimate& b) { return {a.value + b.value, a.error + b.error}; }
Estimate operator-(const Estimate& a, const Estimate& b) { return {a.value - b.value, a.error + b.error}; }

Estimate scale(const Estimate& a, const BigComplex& exact_factor) {
  return {a.value * exact_factor, a.error * exact_factor.abs()};
}

}  // namespace qpsi::numerics
