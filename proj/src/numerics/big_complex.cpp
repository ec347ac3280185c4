#include "qpsi/numerics/big_complex.hpp"

#include "qpsi/errors.hpp"

namespace qpsi::numerics {

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta) { return {r * cos(theta), r * sin(theta)}; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    im_ = BigFloat(0L);
    return *this;
  }
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw ZeroDivisor("complex division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const BigFloat n = o.norm();
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / n;
  BigFloat im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string BigComplex::str(int digits) const {
  if (im_.is_zero()) return re_.str(digits);
  return "(" + re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + numerics::abs(im_).str(digits) + "i)";
}

BigFloat abs(const BigComplex& z) { return z.abs(); }

BigComplex exp(const BigComplex& z) {
  if (z.is_real()) return BigComplex(exp(z.re()));
  return BigComplex::polar(exp(z.re()), z.im());
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw ZeroDivisor("log of zero");
  if (z.is_real() && z.re().sign() > 0) return BigComplex(log(z.re()));
  return {log(z.abs()), z.arg()};
}

BigComplex pow(const BigComplex& z, long n) {
  BigComplex base = n < 0 ? BigComplex(1L) / z : z;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  BigComplex acc(1L);
  while (k != 0) {
    if (k & 1UL) acc *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return acc;
}

BigComplex pow(const BigComplex& base, const BigComplex& e) {
  if (e.is_zero()) return BigComplex(1L);
  if (base.is_zero()) {
    if (e.re().sign() > 0) return BigComplex(0L);
    throw ZeroDivisor("zero raised to a power with nonpositive real part");
  }
  return exp(e * log(base));
}

BigComplex qpow(const BigFloat& q, const BigComplex& e) {
  if (q.sign() <= 0) throw Error("qpow needs a positive real base");
  return exp(e * BigComplex(log(q)));
}

}  // namespace qpsi::numerics
