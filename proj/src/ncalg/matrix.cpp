#include "qpsi/ncalg/matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qpsi/errors.hpp"

namespace qpsi::ncalg {

Matrix Matrix::scalar(std::size_t d, const BigComplex& c) {
  Matrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::diagonal(const std::vector<BigComplex>& diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<BigComplex>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidArgument("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

BigFloat Matrix::norm() const {
  BigFloat s(0L);
  for (const auto& x : e_) s += x.norm();
  return sqrt(s);
}

bool Matrix::is_scalar_multiple_of_identity() const {
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
      if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
    }
  }
  return true;
}

void Matrix::check_dim(const Matrix& o) const {
  if (o.d_ != d_) throw InvalidArgument("matrix dimensions differ");
}

Matrix Matrix::inverse() const {
  const std::size_t d = d_;
  Matrix a = *this;
  Matrix inv = identity(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    BigFloat best = a(col, col).abs();
    for (std::size_t r = col + 1; r < d; ++r) {
      BigFloat v = a(r, col).abs();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best.is_zero()) throw SingularFactor("matrix factor is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < d; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const BigComplex p = a(col, col);
    for (std::size_t j = 0; j < d; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const BigComplex f = a(r, col);
      for (std::size_t j = 0; j < d; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  const BigFloat cond = norm() * inv.norm();
  if (cond > BigFloat::pow2(numerics::working_precision() / 2)) {
    throw SingularFactor("matrix factor is too ill-conditioned to invert (condition " + cond.str(6) + ")");
  }
  return inv;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_dim(o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_dim(o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix& Matrix::operator*=(const BigComplex& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.check_dim(b);
  const std::size_t d = a.d_;
  Matrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

std::string Matrix::str(int digits) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < d_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).str(digits);
    }
  }
  os << ']';
  return os.str();
}

}  // namespace qpsi::ncalg
