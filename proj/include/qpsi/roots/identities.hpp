#pragma once

#include <string>
#include <vector>

#include "qpsi/identities/formal_sum.hpp"
#include "qpsi/identities/report.hpp"
#include "qpsi/roots/root_system.hpp"

namespace qpsi::roots {

using algebra::ContextPtr;
using algebra::QMonomial;
using identities::ResidualReport;
using numerics::BigComplex;
using numerics::BigFloat;
using numerics::Estimate;

// ------------------------------------------------------------ Poincare

struct PoincareResult {
  ResidualReport report;
  algebra::SymbolTable symbols;  // x1..x_dim, then t or t_long, t_short
  algebra::LaurentPoly polynomial;  // W(t), read off the product side
  long weyl_order = 0;
  long weyl_order_at_t1 = 0;  // both sides at t = 1, -1 if they disagree
};

// Sum over W against the product, cross-multiplied to polynomials.
PoincareResult verify_poincare(const RootSystemData& r, bool distinct_t);

// sum_{w} t^{length(w)}.
algebra::LaurentPoly length_generating_function(const RootSystemData& r, const algebra::SymbolTable& symbols);

// -------------------------------------------------- coroot-lattice sum

struct CorootParams {
  BigFloat q;
  BigComplex t_long, t_short;
  std::vector<BigComplex> x;  // ambient coordinates, e^alpha = prod x_i^alpha_i
};

BigComplex exp_root(const CorootParams& p, const Vec& alpha);

numerics::LatticeSum macdonald_coroot_sum(const RootSystemData& r, const CorootParams& p, const BigFloat& tol,
                                          long max_radius = 400);
Estimate macdonald_coroot_product(const RootSystemData& r, const CorootParams& p, const BigFloat& tol);
ResidualReport verify_macdonald_coroot(const RootSystemData& r, const CorootParams& p, const BigFloat& tol,
                                       std::string instance = "default");

// A1 with x = x1/x2: the lattice sum equals (1-tx)/((1+t)(1-x)) times the
// 1psi1 right side at (a,b,z) = (x/t, tx, t).
ResidualReport macdonald_a1_against_1psi1(const BigFloat& q, const BigComplex& t, const BigComplex& x,
                                          const BigFloat& tol);

// ------------------------------------------------------ Gustafson-Milne

struct GustafsonMilneNumeric {
  std::vector<BigComplex> a, b, x;
  BigComplex z;
  BigFloat q;
};

numerics::LatticeSum gustafson_milne_sum(const GustafsonMilneNumeric& p, const BigFloat& tol, long max_radius = 400);
Estimate gustafson_milne_product(const GustafsonMilneNumeric& p, const BigFloat& tol);
ResidualReport verify_gustafson_milne(const GustafsonMilneNumeric& p, const BigFloat& tol,
                                      std::string instance = "default");

// Both sides multiplied by prod_{i<j} (1 - x_j/x_i).
struct GustafsonMilneFormal {
  ContextPtr ctx;
  std::vector<QMonomial> a, b, x;
  QMonomial z;
  int order = 15;
};

// a_j = alpha_j, b_j = beta_j q^2, z = zeta q, free x_i.
GustafsonMilneFormal gustafson_milne_canonical(int n, int order);
qpoch::FormalProduct gustafson_milne_term(const GustafsonMilneFormal& p, const std::vector<long>& r);
qpoch::FormalProduct gustafson_milne_product_cleared(const GustafsonMilneFormal& p);
identities::FormalSum gustafson_milne_sum_formal(const GustafsonMilneFormal& p);
ResidualReport verify_gustafson_milne_formal(const GustafsonMilneFormal& p, std::string instance = "canonical");

// ------------------------------------------------- new multiple 1psi1

struct NewMultipleNumeric {
  BigComplex a, b, z, t;
  std::vector<BigComplex> x;
  BigFloat q;
};

numerics::LatticeSum new_multiple_sum(const NewMultipleNumeric& p, const BigFloat& tol, long max_radius = 400);
Estimate new_multiple_product(const NewMultipleNumeric& p, const BigFloat& tol);
ResidualReport verify_new_multiple_1psi1(const NewMultipleNumeric& p, const BigFloat& tol,
                                         std::string instance = "default");

struct NewMultipleFormal {
  ContextPtr ctx;
  QMonomial a, b, z, t;
  std::vector<QMonomial> x;
  int order = 15;
};

// a = alpha, b = beta q^2, z = zeta q, t = tau q^t_qexp.
NewMultipleFormal new_multiple_canonical(int n, int order, int t_qexp);
qpoch::FormalProduct new_multiple_term(const NewMultipleFormal& p, const std::vector<long>& r);
qpoch::FormalProduct new_multiple_product_cleared(const NewMultipleFormal& p);
identities::FormalSum new_multiple_sum_formal(const NewMultipleFormal& p);
ResidualReport verify_new_multiple_formal(const NewMultipleFormal& p, std::string instance);

// Tries t = tau first and falls back to t = tau q when the sum leaves the
// truncation window; the note records what happened.
ResidualReport verify_new_multiple_formal_scheme(int n, int order);

}  // namespace qpsi::roots
