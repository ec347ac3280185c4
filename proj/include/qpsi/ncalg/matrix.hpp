#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpsi/numerics/big_complex.hpp"

namespace qpsi::ncalg {

using numerics::BigComplex;
using numerics::BigFloat;

// Square matrix over BigComplex, the model for an element of a unital
// Banach algebra. Norms are Frobenius norms throughout (submultiplicative,
// and an upper bound for the operator 2-norm).
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t d) : d_(d), e_(d * d, BigComplex(0L)) {}

  static Matrix identity(std::size_t d) { return scalar(d, BigComplex(1L)); }
  static Matrix scalar(std::size_t d, const BigComplex& c);
  static Matrix diagonal(const std::vector<BigComplex>& diag);
  // Row-major entries; the length must be a perfect square.
  static Matrix from_rows(const std::vector<std::vector<BigComplex>>& rows);

  std::size_t dim() const { return d_; }
  BigComplex& operator()(std::size_t i, std::size_t j) { return e_[i * d_ + j]; }
  const BigComplex& operator()(std::size_t i, std::size_t j) const { return e_[i * d_ + j]; }

  BigFloat norm() const;
  bool is_scalar_multiple_of_identity() const;

  // Gauss-Jordan with partial pivoting. SingularFactor when a pivot
  // vanishes or the Frobenius condition number exceeds 2^(prec/2).
  Matrix inverse() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const BigComplex& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const BigComplex& c) { return a *= c; }
  friend Matrix operator*(const BigComplex& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  std::string str(int digits = 10) const;

 private:
  void check_dim(const Matrix& o) const;

  std::size_t d_ = 0;
  std::vector<BigComplex> e_;
};

using AlgebraElement = Matrix;

// Central elements (b and q) are plain scalars; they commute with every
// matrix by construction.
struct Central {
  BigComplex value;
};

inline Matrix operator*(const Central& c, const Matrix& m) { return c.value * m; }

}  // namespace qpsi::ncalg
