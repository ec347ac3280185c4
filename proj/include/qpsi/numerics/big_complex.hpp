#pragma once

#include <algorithm>
#include <string>

#include "qpsi/algebra/gaussian_rational.hpp"
#include "qpsi/numerics/big_float.hpp"

namespace qpsi::numerics {

// Complex number with MPFR parts. Precision follows the working precision
// (see PrecisionScope); precision_bits() reports what the value carries.
class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigFloat re) : re_(std::move(re)) {}  // NOLINT(implicit)
  BigComplex(double re) : re_(re) {}  // NOLINT(implicit)
  BigComplex(int re) : re_(re) {}  // NOLINT(implicit)
  BigComplex(long re) : re_(re) {}  // NOLINT(implicit)
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(const algebra::GaussianRational& x) : re_(x.re()), im_(x.im()) {}

  static BigComplex i() { return {BigFloat(0L), BigFloat(1L)}; }
  // Unit-modulus number exp(i*theta).
  static BigComplex polar(const BigFloat& r, const BigFloat& theta);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  int precision_bits() const { return std::min(re_.precision(), im_.precision()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  BigComplex conj() const { return {re_, -im_}; }
  BigFloat abs() const { return hypot(re_, im_); }
  BigFloat arg() const { return atan2(im_, re_); }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string str(int digits = 20) const;

 private:
  BigFloat re_{0L};
  BigFloat im_{0L};
};

BigFloat abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
// base^e = exp(e * log(base)) on the principal branch.
BigComplex pow(const BigComplex& base, const BigComplex& e);
// q^e for real q > 0: exp(e * ln q).
BigComplex qpow(const BigFloat& q, const BigComplex& e);

}  // namespace qpsi::numerics
