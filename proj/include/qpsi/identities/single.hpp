#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qpsi/identities/formal_sum.hpp"
#include "qpsi/identities/report.hpp"
#include "qpsi/numerics/summation.hpp"

namespace qpsi::identities {

using algebra::ContextPtr;
using algebra::QLaurentSeries;
using algebra::QMonomial;
using numerics::BigComplex;
using numerics::BigFloat;
using numerics::Estimate;

// ---------------------------------------------------------------- 1psi1

struct Psi11Formal {
  ContextPtr ctx;
  QMonomial a, b, z;
  int order = 30;
};

// a = alpha, b = beta q^2, z = zeta q.
Psi11Formal psi11_canonical(int order);

// (a)_n/(b)_n z^n and the four-quotient product side.
qpoch::FormalProduct psi11_term(const QMonomial& a, const QMonomial& b, const QMonomial& z, long n);
qpoch::FormalProduct psi11_product(const QMonomial& a, const QMonomial& b, const QMonomial& z);

// RegionViolation unless z and b/(az) have positive q-order. The second
// condition is waived when b is a pure power q^j, j >= 1, since the terms
// n <= -j then vanish.
void check_psi11_scheme(const Psi11Formal& p);

FormalSum psi11_sum_formal(const Psi11Formal& p);
ResidualReport verify_1psi1_formal(const Psi11Formal& p, std::string instance = "canonical");

// b = q^{k+1} and a -> alpha q^{-k}, z = zeta q.
Psi11Formal psi11_ismail(int k, int order);

struct Psi11Numeric {
  BigComplex a, b, z;
  BigFloat q;
};

void check_psi11_region(const Psi11Numeric& p);
numerics::BilateralSum psi11_sum_numeric(const Psi11Numeric& p, const BigFloat& tol);
Estimate psi11_product_numeric(const Psi11Numeric& p, const BigFloat& tol);
ResidualReport verify_1psi1_numeric(const Psi11Numeric& p, const BigFloat& tol, std::string instance = "default");

// ----------------------------------------------------------- q-binomial

struct QBinomialFormal {
  ContextPtr ctx;
  QMonomial a, z;
  int order = 30;
};

// a = alpha, z = zeta q.
QBinomialFormal qbinomial_canonical(int order);
FormalSum qbinomial_sum_formal(const QBinomialFormal& p);
ResidualReport verify_qbinomial_formal(const QBinomialFormal& p, std::string instance = "canonical");

struct QBinomialNumeric {
  BigComplex a, z;
  BigFloat q;
};
ResidualReport verify_qbinomial_numeric(const QBinomialNumeric& p, const BigFloat& tol,
                                        std::string instance = "default");

// ------------------------------------------------------- triple product

struct TripleFormal {
  ContextPtr ctx;
  QMonomial z;
  int order = 40;
};

// z = zeta q^s, s >= 1.
TripleFormal triple_canonical(int order, int s = 1);
FormalSum triple_sum_formal(const TripleFormal& p);
ResidualReport verify_triple_product_formal(const TripleFormal& p, std::string instance = "canonical");
// theta(zeta q) obtained from the 1psi1 with b = 0, a = alpha^-1,
// z = alpha zeta q, followed by alpha -> 0. Symbols {alpha, zeta}.
QLaurentSeries triple_from_1psi1(const ContextPtr& ctx, int order);

numerics::BilateralSum triple_sum_numeric(const BigComplex& z, const BigFloat& q, const BigFloat& tol);
ResidualReport verify_triple_product_numeric(const BigComplex& z, const BigFloat& q, const BigFloat& tol,
                                             std::string instance = "default");

// ------------------------------------------------------ q-beta integral

struct QBetaNumeric {
  BigFloat alpha, beta;
  BigComplex c;
  BigFloat q;
};

// Jackson-integral side and the theta/q-gamma side, computed separately.
Estimate qbeta_integral_side(const QBetaNumeric& p, const BigFloat& tol);
Estimate qbeta_product_side(const QBetaNumeric& p, const BigFloat& tol);
// The same integral through the 1psi1 under (a,b,z) = (-c, -c q^{alpha+beta}, q^alpha).
Estimate qbeta_via_1psi1(const QBetaNumeric& p, const BigFloat& tol);
ResidualReport verify_qbeta_integral(const QBetaNumeric& p, const BigFloat& tol, std::string instance);

// ------------------------------------------------------------ Kronecker

// Both sides of the Kronecker identity multiplied by (1 - alpha beta),
// symbols {alpha, beta}.
std::pair<QLaurentSeries, QLaurentSeries> kronecker_cleared(const ContextPtr& ctx, int order);
ResidualReport verify_kronecker_formal(int order);

struct KroneckerNumeric {
  BigComplex a, b;
  BigFloat q;
};
Estimate kronecker_sum_side(const KroneckerNumeric& p, const BigFloat& tol);
Estimate kronecker_product_side(const KroneckerNumeric& p, const BigFloat& tol);
ResidualReport verify_kronecker_numeric(const KroneckerNumeric& p, const BigFloat& tol,
                                        std::string instance = "default");

// -------------------------------------------------------- Guo-Schlosser

struct GuoSchlosserNumeric {
  BigComplex a, b, c, z;
  BigFloat q;
};

void check_guo_schlosser_region(const GuoSchlosserNumeric& p);
numerics::BilateralSum guo_schlosser_sum(const GuoSchlosserNumeric& p, const BigFloat& tol);
Estimate guo_schlosser_product(const GuoSchlosserNumeric& p, const BigFloat& tol);
ResidualReport verify_guo_schlosser(const GuoSchlosserNumeric& p, const BigFloat& tol, std::string instance);
// |scaled Guo-Schlosser sum - 1psi1 sum| at c = 1, where the scaling is
// (az)_inf (q/az)_inf / ((zq)_inf (b/az)_inf).
ResidualReport guo_schlosser_c1_consistency(const GuoSchlosserNumeric& p, const BigFloat& tol);
// Parameter sets well inside |b/ac| < |z| < 1, drawn from the seed.
std::vector<GuoSchlosserNumeric> guo_schlosser_samples(std::uint64_t seed, std::size_t count);

// -------------------------------------------------------------- helpers

std::string describe(const QMonomial& m, const algebra::SymbolTable& symbols);
std::string describe(const BigComplex& z);
std::string describe(const BigFloat& x);

}  // namespace qpsi::identities
