#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpsi/identities/report.hpp"
#include "qpsi/ncalg/matrix.hpp"

namespace qpsi::ncalg {

enum class Orientation { Ascending, Descending };

// prod_{i=m}^{n} a_i: the identity for n = m-1, a_m ... a_n for n >= m, and
// a_{m-1}^{-1} ... a_{n+1}^{-1} for n < m-1. Descending reverses the order
// of the factors in both nonempty cases.
Matrix ordered_prod(const std::function<Matrix(long)>& factor, long m, long n, std::size_t d,
                    Orientation orientation = Orientation::Ascending);

// Parameter pairs (a_s; b_s) of the symbol. b_s may be a matrix or a
// central scalar lifted to one.
struct MsPairs {
  std::vector<Matrix> a;
  std::vector<Matrix> b;
};

// The i-th factor z prod_s (1 - a_s q^{i-1})(1 - b_s q^{i-1})^{-1}, s ascending.
Matrix ms_factor(const MsPairs& p, const Matrix& z, const BigFloat& q, long i);

struct MsValue {
  Matrix value;
  BigFloat error{0L};
  long factors = 0;
};

// MS(a; b; z)_k with k in Z, or k = nullopt for the infinite symbol.
// Ascending is the "+" symbol prod_{i=1}^{k}, Descending the "-" symbol
// A_k ... A_1. The infinite case needs z = 1 and stops once the tail
// factors are within tol of the identity (NonConvergentProduct otherwise).
MsValue ms_symbol(const MsPairs& p, const Matrix& z, const BigFloat& q, std::optional<long> k, Orientation sign,
                  const BigFloat& tol = BigFloat(0L));

struct NoncommutativeParams {
  Matrix a, z;
  Central b;
  BigFloat q;
};

// NormConditionViolated unless max(|q|, |z|, |b a^-1 z^-1|) < 1 with q real in (0,1).
void check_noncommutative_region(const NoncommutativeParams& p);

struct NoncommutativeSides {
  Matrix lhs, rhs;
  BigFloat lhs_error{0L}, rhs_error{0L};
  long lowest_index = 0;
  long highest_index = 0;
};

// sum_k MS(a;b;z)^+_k against
// MS(za; z; 1)^-_inf MS(q a^-1 z^-1; q z a^-1 z^-1; 1)^+_inf MS(b z a^-1 z^-1, q; b a^-1 z^-1, b; 1)^-_inf.
NoncommutativeSides noncommutative_sides(const NoncommutativeParams& p, const BigFloat& tol);
identities::ResidualReport verify_noncommutative_1psi1(const NoncommutativeParams& p, const BigFloat& tol,
                                                       std::string instance = "default");

// Seeded d x d instance: a and z drawn from four-digit decimals, then
// rescaled so |z| = 1/2 and |b a^-1 z^-1| = 1/2.
NoncommutativeParams noncommutative_sample(std::uint64_t seed, std::size_t d, const BigFloat& q, const BigComplex& b);

}  // namespace qpsi::ncalg
