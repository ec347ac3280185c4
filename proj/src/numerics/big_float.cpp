#include "qpsi/numerics/big_float.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <memory>

#include "qpsi/errors.hpp"

namespace qpsi::numerics {

namespace {

thread_local int g_precision = 256;

}  // namespace

int working_precision() { return g_precision; }

void set_working_precision(int bits) {
  if (bits < 64) throw Error("precision must be at least 64 bits");
  g_precision = bits;
}

PrecisionScope::PrecisionScope(int bits) : saved_(g_precision) { set_working_precision(bits); }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

BigFloat::BigFloat() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x) {
  mpfr_init2(v_, g_precision);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(long x) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& x) {
  mpfr_init2(v_, g_precision);
  mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal) {
  mpfr_init2(v_, g_precision);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(v_)) {
    mpfr_clear(v_);
    throw Error("cannot parse number '" + decimal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, g_precision);
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Steal o's limbs; o is left as a valid value of minimal precision.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, g_precision);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi() {
  BigFloat r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::epsilon() { return pow2(1 - g_precision); }

BigFloat BigFloat::pow2(long e) {
  BigFloat r(1L);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(v_);
}

namespace {

// Result buffer at working precision, then apply op.
template <typename F>
BigFloat unary(const BigFloat& x, F op) {
  BigFloat r;
  op(r.get(), x.get());
  return r;
}

}  // namespace

BigFloat BigFloat::operator-() const {
  return unary(*this, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_neg(r, x, MPFR_RNDN); });
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (mpfr_get_prec(v_) != g_precision) mpfr_prec_round(v_, g_precision, MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (mpfr_get_prec(v_) != g_precision) mpfr_prec_round(v_, g_precision, MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (mpfr_get_prec(v_) != g_precision) mpfr_prec_round(v_, g_precision, MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (mpfr_get_prec(v_) != g_precision) mpfr_prec_round(v_, g_precision, MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string BigFloat::str(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw Error("mpfr formatting failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat abs(const BigFloat& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_abs(r, a, MPFR_RNDN); });
}
BigFloat sqrt(const BigFloat& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sqrt(r, a, MPFR_RNDN); });
}
BigFloat exp(const BigFloat& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_exp(r, a, MPFR_RNDN); });
}
BigFloat log(const BigFloat& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_log(r, a, MPFR_RNDN); });
}
BigFloat sin(const BigFloat& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sin(r, a, MPFR_RNDN); });
}
BigFloat cos(const BigFloat& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_cos(r, a, MPFR_RNDN); });
}
BigFloat floor(const BigFloat& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_floor(r, a); });
}

BigFloat pow(const BigFloat& base, const BigFloat& e) {
  BigFloat r;
  mpfr_pow(r.get(), base.get(), e.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, long e) {
  BigFloat r;
  mpfr_pow_si(r.get(), base.get(), e, MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

}  // namespace qpsi::numerics
