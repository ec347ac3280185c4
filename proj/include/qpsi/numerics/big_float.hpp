#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace qpsi::numerics {

// Working precision in bits for newly computed values on this thread.
// Every arithmetic result is rounded to nearest at the working precision
// in force when it is produced.
int working_precision();
void set_working_precision(int bits);

// RAII guard that sets the working precision for a scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  BigFloat();
  BigFloat(double x);  // NOLINT(implicit)
  BigFloat(int x) : BigFloat(static_cast<long>(x)) {}  // NOLINT(implicit)
  BigFloat(long x);  // NOLINT(implicit)
  explicit BigFloat(const mpq_class& x);
  explicit BigFloat(const std::string& decimal);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat rational(long num, long den) { return BigFloat(mpq_class(num, den)); }
  static BigFloat pi();
  // 2^(1 - working precision): one unit in the last place relative to 1.
  static BigFloat epsilon();
  static BigFloat pow2(long e);

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  // Scientific notation with `digits` significant digits.
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& e);
BigFloat pow(const BigFloat& base, long e);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat floor(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace qpsi::numerics
