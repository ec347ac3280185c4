#include "qpsi/algebra/gaussian_rational.hpp"

#include "qpsi/errors.hpp"

namespace qpsi::algebra {

void GaussianRational::canonicalize() {
  if (sgn(re_.get_den()) == 0 || sgn(im_.get_den()) == 0) throw ZeroDivisor("rational with zero denominator");
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  // Most coefficients in practice are real; avoid the four-product path.
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ZeroDivisor("inverse of zero Gaussian rational");
  if (sgn(im_) == 0) return GaussianRational(mpq_class(1) / re_);
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

GaussianRational GaussianRational::pow(long e) const {
  GaussianRational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  GaussianRational acc(1);
  while (k != 0) {
    if (k & 1UL) acc *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return acc;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*i";
  std::string out = "(" + re_.get_str();
  out += sgn(im_) > 0 ? "+" : "-";
  mpq_class a = abs(im_);
  out += a.get_str() + "*i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

}  // namespace qpsi::algebra
