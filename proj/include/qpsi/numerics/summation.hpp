#pragma once

#include <functional>
#include <vector>

#include "qpsi/numerics/big_complex.hpp"

namespace qpsi::numerics {

// A value together with an a-priori bound on its absolute error
// (truncation tails plus a rounding margin).
struct Estimate {
  BigComplex value;
  BigFloat error{0L};
};

// Geometric majorant for the tail of a one-sided sum: for every index
// beyond `start`, |term_{next}| <= ratio * |term|.
struct RatioBound {
  long start = 0;
  BigFloat ratio{0L};
};

// Certified tail from the last summed index K: sum_{k>K} |t_k| <= |t_K| rho/(1-rho).
struct TailCertificate {
  long start = 0;
  BigFloat ratio{0L};
  BigFloat term_bound{0L};

  BigFloat tail_bound() const { return term_bound * ratio / (BigFloat(1L) - ratio); }
};

// Smallest n0 in [0, cap] with bound(n0) <= target, where bound is
// nonincreasing in n0. The returned RatioBound carries `target`.
// DivergentDirection if target >= 1 or no such n0 exists.
RatioBound find_ratio_bound(const std::function<BigFloat(long)>& bound, const BigFloat& target, long cap = 100000);

// (a; q)_inf with |error| bound; 0 < q < 1.
Estimate eval_poch_infinite(const BigComplex& a, const BigFloat& q, const BigFloat& tol);

struct BilateralSum {
  Estimate sum;
  long lowest_index = 0;
  long highest_index = 0;
  TailCertificate forward;
  TailCertificate backward;
};

// sum_{n in Z} termgen(n), truncated on both sides once the certified tail
// falls below tol/4. Observed consecutive-term ratios beyond each
// certificate's start are checked against it.
BilateralSum eval_bilateral(const std::function<BigComplex(long)>& termgen, const RatioBound& forward,
                            const RatioBound& backward, const BigFloat& tol, long max_terms = 200000);

// One-sided variant over n >= 0.
BilateralSum eval_unilateral(const std::function<BigComplex(long)>& termgen, const RatioBound& forward,
                             const BigFloat& tol, long max_terms = 200000);

struct LatticeSum {
  Estimate sum;
  long radius = 0;
  std::size_t points = 0;
};

// Sum over Z^dim by sup-norm shells. Stops once two consecutive shells
// each contribute less than tol/10 in absolute mass; the reported error is
// the mass of the last shell. NonStabilisedLatticeSum on reaching max_radius.
LatticeSum eval_lattice_shells(std::size_t dim, const std::function<BigComplex(const std::vector<long>&)>& term,
                               const BigFloat& tol, long max_radius);

}  // namespace qpsi::numerics

namespace qpsi::numerics {

// Error propagation for products and quotients of estimates (first order
// plus the cross term, so the bounds stay rigorous).
Estimate operator*(const Estimate& a, const Estimate& b);
Estimate operator/(const Estimate& a, const Estimate& b);
Estimate operator+(const Estimate& a, const Estimate& b);
Estimate operator-(const Estimate& a, const Estimate& b);
Estimate scale(const Estimate& a, const BigComplex& exact_factor);

}  // namespace qpsi::numerics
