#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpsi/algebra/laurent_poly.hpp"

namespace qpsi::algebra {

// Shared setting for one formal computation: the symbols in play and the
// lowest q-exponent any intermediate series may reach.
struct FormalContext {
  SymbolTable symbols;
  int q_floor;

  // Floor defaults to -nominal_order.
  static std::shared_ptr<const FormalContext> make(SymbolTable symbols, int nominal_order);
  static std::shared_ptr<const FormalContext> make_with_floor(SymbolTable symbols, int q_floor);
};

using ContextPtr = std::shared_ptr<const FormalContext>;

// c * m * q^k: the values a formal parameter may take.
struct QMonomial {
  GaussianRational coeff{1};
  Monomial mono{};
  int qexp = 0;

  static QMonomial scalar(const GaussianRational& c) { return {c, Monomial{}, 0}; }
  static QMonomial q_power(int k) { return {GaussianRational(1), Monomial{}, k}; }

  bool is_zero() const { return coeff.is_zero(); }
  bool is_one() const { return coeff.is_one() && mono.is_one() && qexp == 0; }
  // No symbolic part: a scalar times a power of q.
  bool is_scalar_q_power() const { return mono.is_one(); }

  QMonomial inverse() const;
  QMonomial pow(int k) const;
  QMonomial times_q(int k) const { return {coeff, mono, qexp + k}; }
  friend QMonomial operator*(const QMonomial& a, const QMonomial& b);
  friend bool operator==(const QMonomial& a, const QMonomial& b) {
    return a.coeff == b.coeff && a.mono == b.mono && a.qexp == b.qexp;
  }

  std::string str(const SymbolTable& symbols) const;
};

// Result of an order-limited comparison.
struct SeriesComparison {
  bool equal = true;
  std::optional<int> first_difference;
};

// Truncated Laurent series in q with LaurentPoly coefficients:
//   sum_{k=floor}^{order-1} c_k q^k + O(q^order).
//
// Arithmetic tracks the order that is actually known. For products the
// known order is min(order_a + val_b, order_b + val_a), which is the plain
// minimum of the operand orders when both start at q^0.
class QLaurentSeries {
 public:
  QLaurentSeries(ContextPtr ctx, int floor, int order);

  static QLaurentSeries zero(ContextPtr ctx, int order) { return {std::move(ctx), 0, order}; }
  static QLaurentSeries one(ContextPtr ctx, int order);
  static QLaurentSeries constant(ContextPtr ctx, const LaurentPoly& p, int order);
  static QLaurentSeries from_qmonomial(ContextPtr ctx, const QMonomial& m, int order);
  // Finite sum of c_k q^k given as (k, c_k) pairs.
  static QLaurentSeries polynomial(ContextPtr ctx, const std::vector<std::pair<int, LaurentPoly>>& terms, int order);

  const ContextPtr& context() const { return ctx_; }
  const SymbolTable& symbols() const { return ctx_->symbols; }
  int floor() const { return floor_; }
  int order() const { return order_; }

  // Coefficient of q^k; zero below floor. Throws for k >= order.
  const LaurentPoly& coefficient(int k) const;
  LaurentPoly& mutable_coefficient(int k);

  // Lowest q-exponent with a nonzero coefficient, or order() for zero.
  int valuation() const;
  bool is_zero() const { return valuation() == order_; }
  bool is_real() const;

  QLaurentSeries truncated(int new_order) const;

  QLaurentSeries operator-() const;
  friend QLaurentSeries operator+(const QLaurentSeries& a, const QLaurentSeries& b);
  friend QLaurentSeries operator-(const QLaurentSeries& a, const QLaurentSeries& b);
  friend QLaurentSeries operator*(const QLaurentSeries& a, const QLaurentSeries& b);
  QLaurentSeries& operator+=(const QLaurentSeries& o);
  QLaurentSeries& operator*=(const QLaurentSeries& o) { return *this = *this * o; }

  QLaurentSeries invert() const;

  // Exact multiplication by c * m * q^k.
  QLaurentSeries shifted(const QMonomial& m) const;

  // In-place multiplication by (1 - y) with y.qexp >= 0.
  void mul_binomial(const QMonomial& y);
  // In-place division by (1 - y) with y.qexp >= 1 (geometric recurrence).
  void div_binomial(const QMonomial& y);

  // Replace `symbol` by value. A nonzero q-exponent in value moves
  // coefficients between q-powers; terms landing at or beyond the order are
  // dropped, terms landing below the context floor raise FloorViolation.
  // A downward shift lowers the known order by the largest shift among the
  // known terms.
  QLaurentSeries substitute(const std::string& symbol, const QMonomial& value) const;
  // Coefficientwise exact division by (1 - c*m) for a q-free binomial.
  QLaurentSeries divide_coefficients_by_binomial(const GaussianRational& c, const Monomial& m) const;

  std::string str(int max_terms = 12) const;

 private:
  void check_floor(int floor) const;
  void check_same_context(const QLaurentSeries& o) const;

  ContextPtr ctx_;
  int floor_;
  int order_;
  std::vector<LaurentPoly> coeffs_;  // coeffs_[k - floor_]
};

SeriesComparison equal_to_order(const QLaurentSeries& a, const QLaurentSeries& b, int order);

}  // namespace qpsi::algebra
