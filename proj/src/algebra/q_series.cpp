#include "qpsi/algebra/q_series.hpp"

#include <algorithm>
#include <sstream>

#include "qpsi/errors.hpp"

namespace qpsi::algebra {

std::shared_ptr<const FormalContext> FormalContext::make(SymbolTable symbols, int nominal_order) {
  return make_with_floor(std::move(symbols), -nominal_order);
}

std::shared_ptr<const FormalContext> FormalContext::make_with_floor(SymbolTable symbols, int q_floor) {
  return std::make_shared<const FormalContext>(FormalContext{std::move(symbols), q_floor});
}

QMonomial QMonomial::inverse() const {
  if (coeff.is_zero()) throw ZeroDivisor("inverse of a zero monomial");
  return {coeff.inverse(), mono.inverse(), -qexp};
}

QMonomial QMonomial::pow(int k) const {
  if (k < 0 && coeff.is_zero()) throw ZeroDivisor("negative power of a zero monomial");
  return {coeff.pow(k), mono.pow(k), qexp * k};
}

QMonomial operator*(const QMonomial& a, const QMonomial& b) {
  return {a.coeff * b.coeff, a.mono * b.mono, a.qexp + b.qexp};
}

std::string QMonomial::str(const SymbolTable& symbols) const {
  std::string out;
  if (!coeff.is_one() || (mono.is_one() && qexp == 0)) out = coeff.str();
  if (!mono.is_one()) out += (out.empty() ? "" : "*") + symbols.format(mono);
  if (qexp != 0) out += (out.empty() ? "" : "*") + std::string("q") + (qexp == 1 ? "" : "^" + std::to_string(qexp));
  return out;
}

QLaurentSeries::QLaurentSeries(ContextPtr ctx, int floor, int order)
    : ctx_(std::move(ctx)), floor_(floor), order_(order) {
  if (!ctx_) throw SymbolMismatch("series without a formal context");
  if (floor_ > order_) floor_ = order_;
  check_floor(floor_);
  coeffs_.resize(static_cast<std::size_t>(order_ - floor_));
}

QLaurentSeries QLaurentSeries::one(ContextPtr ctx, int order) {
  return constant(std::move(ctx), LaurentPoly(1), order);
}

QLaurentSeries QLaurentSeries::constant(ContextPtr ctx, const LaurentPoly& p, int order) {
  QLaurentSeries s(std::move(ctx), 0, order);
  if (order > 0) s.coeffs_[0] = p;
  return s;
}

QLaurentSeries QLaurentSeries::from_qmonomial(ContextPtr ctx, const QMonomial& m, int order) {
  return polynomial(std::move(ctx), {{m.qexp, LaurentPoly::term(m.coeff, m.mono)}}, order);
}

QLaurentSeries QLaurentSeries::polynomial(ContextPtr ctx, const std::vector<std::pair<int, LaurentPoly>>& terms,
                                          int order) {
  int lo = 0;
  for (const auto& [k, p] : terms) lo = std::min(lo, k);
  QLaurentSeries s(std::move(ctx), std::min(lo, order), order);
  for (const auto& [k, p] : terms) {
    if (k < order) s.mutable_coefficient(k) += p;
  }
  return s;
}

void QLaurentSeries::check_floor(int floor) const {
  if (floor < ctx_->q_floor) {
    throw FloorViolation("q-exponent " + std::to_string(floor) + " below the configured floor " +
                         std::to_string(ctx_->q_floor));
  }
}

void QLaurentSeries::check_same_context(const QLaurentSeries& o) const {
  if (ctx_ != o.ctx_ && !(ctx_->symbols == o.ctx_->symbols)) throw SymbolMismatch("series over different symbol tables");
}

const LaurentPoly& QLaurentSeries::coefficient(int k) const {
  static const LaurentPoly kZero;
  if (k >= order_) throw Error("coefficient q^" + std::to_string(k) + " beyond known order " + std::to_string(order_));
  if (k < floor_) return kZero;
  return coeffs_[static_cast<std::size_t>(k - floor_)];
}

LaurentPoly& QLaurentSeries::mutable_coefficient(int k) {
  if (k >= order_ || k < floor_) throw Error("coefficient index outside the stored range");
  return coeffs_[static_cast<std::size_t>(k - floor_)];
}

int QLaurentSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return floor_ + static_cast<int>(i);
  }
  return order_;
}

bool QLaurentSeries::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.is_real(); });
}

QLaurentSeries QLaurentSeries::truncated(int new_order) const {
  new_order = std::min(new_order, order_);
  QLaurentSeries r(ctx_, std::min(floor_, new_order), new_order);
  for (int k = r.floor_; k < new_order; ++k) r.mutable_coefficient(k) = coefficient(k);
  return r;
}

QLaurentSeries QLaurentSeries::operator-() const {
  QLaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QLaurentSeries operator+(const QLaurentSeries& a, const QLaurentSeries& b) {
  a.check_same_context(b);
  const int order = std::min(a.order_, b.order_);
  QLaurentSeries r(a.ctx_, std::min({a.floor_, b.floor_, order}), order);
  for (int k = r.floor_; k < order; ++k) {
    LaurentPoly& c = r.mutable_coefficient(k);
    c = a.coefficient(k);
    c += b.coefficient(k);
  }
  return r;
}

QLaurentSeries operator-(const QLaurentSeries& a, const QLaurentSeries& b) { return a + (-b); }

QLaurentSeries& QLaurentSeries::operator+=(const QLaurentSeries& o) {
  check_same_context(o);
  if (o.floor_ < floor_ && o.floor_ < std::min(order_, o.order_)) return *this = *this + o;
  order_ = std::min(order_, o.order_);
  coeffs_.resize(static_cast<std::size_t>(std::max(order_ - floor_, 0)));
  for (int k = std::max(floor_, o.floor_); k < order_; ++k) mutable_coefficient(k) += o.coefficient(k);
  return *this;
}

QLaurentSeries operator*(const QLaurentSeries& a, const QLaurentSeries& b) {
  a.check_same_context(b);
  const int va = a.valuation();
  const int vb = b.valuation();
  const int order = std::min(a.order_ + vb, b.order_ + va);
  QLaurentSeries r(a.ctx_, a.floor_ + b.floor_, order);
  if (va == a.order_ || vb == b.order_) return r;
  for (int i = va; i < a.order_; ++i) {
    const LaurentPoly& ai = a.coefficient(i);
    if (ai.is_zero()) continue;
    for (int j = vb; j < b.order_ && i + j < order; ++j) {
      const LaurentPoly& bj = b.coefficient(j);
      if (bj.is_zero()) continue;
      r.mutable_coefficient(i + j) += ai * bj;
    }
  }
  return r;
}

QLaurentSeries QLaurentSeries::invert() const {
  const int v = valuation();
  if (v == order_) throw ZeroDivisor("inverse of the zero series");
  const LaurentPoly& lead = coefficient(v);
  if (!lead.is_unit()) {
    throw NonInvertibleLeadingCoefficient("leading coefficient " + lead.str(symbols()) + " is not a monomial");
  }
  const auto& lt = lead.terms().front();
  const GaussianRational lc_inv = lt.coeff.inverse();
  const Monomial lm_inv = lt.mono.inverse();
  const int precision = order_ - v;
  QLaurentSeries r(ctx_, -v, -v + precision);
  // b_0 = lead^-1, b_k = -lead^-1 sum_{i=1}^{k} a_{v+i} b_{k-i}
  std::vector<LaurentPoly> b(static_cast<std::size_t>(precision));
  b[0] = LaurentPoly::term(lc_inv, lm_inv);
  for (int k = 1; k < precision; ++k) {
    LaurentPoly acc;
    for (int i = 1; i <= k; ++i) {
      const LaurentPoly& ai = coefficient(v + i);
      if (ai.is_zero() || b[static_cast<std::size_t>(k - i)].is_zero()) continue;
      acc += ai * b[static_cast<std::size_t>(k - i)];
    }
    b[static_cast<std::size_t>(k)] = acc.scaled(-lc_inv, lm_inv);
  }
  for (int k = 0; k < precision; ++k) r.mutable_coefficient(-v + k) = std::move(b[static_cast<std::size_t>(k)]);
  return r;
}

QLaurentSeries QLaurentSeries::shifted(const QMonomial& m) const {
  QLaurentSeries r(ctx_, floor_ + m.qexp, order_ + m.qexp);
  if (m.is_zero()) return r;
  for (int k = floor_; k < order_; ++k) r.mutable_coefficient(k + m.qexp) = coefficient(k).scaled(m.coeff, m.mono);
  return r;
}

void QLaurentSeries::mul_binomial(const QMonomial& y) {
  if (y.qexp < 0) throw Error("mul_binomial needs a factor of nonnegative q-order");
  if (y.is_zero()) return;
  const GaussianRational minus_c = -y.coeff;
  if (y.qexp == 0) {
    for (auto& c : coeffs_) {
      if (c.is_zero()) continue;
      LaurentPoly copy = c;
      c.add_scaled(copy, minus_c, y.mono);
    }
    return;
  }
  for (int e = order_ - 1; e - y.qexp >= floor_; --e) {
    const LaurentPoly& src = coefficient(e - y.qexp);
    if (src.is_zero()) continue;
    mutable_coefficient(e).add_scaled(src, minus_c, y.mono);
  }
}

void QLaurentSeries::div_binomial(const QMonomial& y) {
  if (y.qexp < 1) throw NonInvertibleLeadingCoefficient("div_binomial needs a factor of positive q-order");
  if (y.is_zero()) return;
  for (int e = floor_ + y.qexp; e < order_; ++e) {
    const LaurentPoly& src = coefficient(e - y.qexp);
    if (src.is_zero()) continue;
    // src and the target are distinct slots since qexp >= 1.
    mutable_coefficient(e).add_scaled(src, y.coeff, y.mono);
  }
}

QLaurentSeries QLaurentSeries::substitute(const std::string& symbol, const QMonomial& value) const {
  const std::size_t idx = symbols().index(symbol);
  if (value.qexp == 0) {
    QLaurentSeries r(ctx_, floor_, order_);
    for (int k = floor_; k < order_; ++k) r.mutable_coefficient(k) = coefficient(k).substitute(idx, value.coeff, value.mono);
    return r;
  }
  // Collect (target exponent, term) first to size the result.
  std::vector<std::pair<int, LaurentPoly>> moved;
  int lo = floor_;
  for (int k = floor_; k < order_; ++k) {
    for (const auto& t : coefficient(k).terms()) {
      const int d = t.mono.degree_in(idx);
      const int target = k + value.qexp * d;
      if (target >= order_) continue;
      LaurentPoly single = LaurentPoly::term(t.coeff, t.mono).substitute(idx, value.coeff, value.mono);
      lo = std::min(lo, target);
      moved.emplace_back(target, std::move(single));
    }
  }
  check_floor(lo);
  // A term q^k x^d with k >= order is unknown but lands at k + qexp*d. Assume
  // the tail has the same x-degree range as the known part and give up the
  // largest downward shift seen.
  int drop = 0;
  for (int k = floor_; k < order_; ++k) {
    for (const auto& t : coefficient(k).terms()) drop = std::min(drop, value.qexp * t.mono.degree_in(idx));
  }
  const int order = order_ + drop;
  std::erase_if(moved, [order](const auto& kp) { return kp.first >= order; });
  QLaurentSeries r(ctx_, std::min(lo, order), order);
  for (auto& [k, p] : moved) r.mutable_coefficient(k) += p;
  return r;
}

QLaurentSeries QLaurentSeries::divide_coefficients_by_binomial(const GaussianRational& c, const Monomial& m) const {
  QLaurentSeries r(ctx_, floor_, order_);
  for (int k = floor_; k < order_; ++k) r.mutable_coefficient(k) = coefficient(k).divide_by_binomial(c, m);
  return r;
}

std::string QLaurentSeries::str(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (int k = floor_; k < order_ && shown < max_terms; ++k) {
    const LaurentPoly& c = coefficient(k);
    if (c.is_zero()) continue;
    if (shown++ > 0) os << " + ";
    os << "(" << c.str(symbols()) << ")";
    if (k != 0) os << "*q^" << k;
  }
  if (shown == 0) os << "0";
  os << " + O(q^" << order_ << ")";
  return os.str();
}

SeriesComparison equal_to_order(const QLaurentSeries& a, const QLaurentSeries& b, int order) {
  if (order > std::min(a.order(), b.order())) {
    throw Error("comparison order " + std::to_string(order) + " exceeds the known order of an operand");
  }
  SeriesComparison out;
  for (int k = std::min(a.floor(), b.floor()); k < order; ++k) {
    if (!(a.coefficient(k) == b.coefficient(k))) {
      out.equal = false;
      out.first_difference = k;
      return out;
    }
  }
  return out;
}

}  // namespace qpsi::algebra
