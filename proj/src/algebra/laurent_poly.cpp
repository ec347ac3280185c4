#include "qpsi/algebra/laurent_poly.hpp"

#include <algorithm>
#include <map>

#include "qpsi/errors.hpp"

namespace qpsi::algebra {

LaurentPoly::LaurentPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::term(const GaussianRational& c, const Monomial& m) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  LaurentPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

GaussianRational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return GaussianRational{};
}

bool LaurentPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& r, const GaussianRational& c, const Monomial& m) {
  if (r.terms_.empty() || c.is_zero()) return;
  const bool unit_shift = m.is_one();
  const int sign = c.is_one() ? 1 : (c == GaussianRational(-1) ? -1 : 0);
  // Multiplying by a fixed monomial keeps the lexicographic order.
  auto shifted = [&](const Term& t) { return unit_shift ? t.mono : t.mono * m; };
  auto accumulate = [&](GaussianRational& into, const GaussianRational& x) {
    if (sign == 1) {
      into += x;
    } else if (sign == -1) {
      into -= x;
    } else {
      into += x * c;
    }
  };

  bool in_place = terms_.size() >= r.terms_.size();
  if (in_place) {
    auto a = terms_.begin();
    for (const auto& t : r.terms_) {
      const Monomial y = shifted(t);
      while (a != terms_.end() && a->mono < y) ++a;
      if (a == terms_.end() || !(a->mono == y)) {
        in_place = false;
        break;
      }
      ++a;
    }
  }
  if (in_place) {
    auto a = terms_.begin();
    bool zeros = false;
    for (const auto& t : r.terms_) {
      const Monomial y = shifted(t);
      while (!(a->mono == y)) ++a;
      accumulate(a->coeff, t.coeff);
      zeros = zeros || a->coeff.is_zero();
      ++a;
    }
    if (zeros) std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
    return;
  }

  std::vector<Term> merged;
  merged.reserve(terms_.size() + r.terms_.size());
  auto a = terms_.begin();
  for (const auto& t : r.terms_) {
    const Monomial y = shifted(t);
    while (a != terms_.end() && a->mono < y) merged.push_back(std::move(*a++));
    if (a != terms_.end() && a->mono == y) {
      accumulate(a->coeff, t.coeff);
      if (!a->coeff.is_zero()) merged.push_back(std::move(*a));
      ++a;
    } else {
      merged.push_back({y, sign == 1 ? t.coeff : sign == -1 ? -t.coeff : t.coeff * c});
    }
  }
  while (a != terms_.end()) merged.push_back(std::move(*a++));
  terms_ = std::move(merged);
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c, const Monomial& m) const {
  if (c.is_zero()) return {};
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, GaussianRational(1), Monomial{});
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, GaussianRational(-1), Monomial{});
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() <= 4) {
    LaurentPoly r;
    for (const auto& t : small.terms_) r.add_scaled(large, t.coeff, t.mono);
    return r;
  }
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return LaurentPoly::from_unsorted(std::move(prod));
}

LaurentPoly LaurentPoly::substitute(std::size_t index, const GaussianRational& c, const Monomial& m) const {
  if (m.degree_in(index) != 0) throw SymbolMismatch("substitution value depends on the substituted symbol");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int k = t.mono.degree_in(index);
    if (k == 0) {
      out.push_back(t);
      continue;
    }
    if (c.is_zero() && k < 0) throw ZeroDivisor("substituting zero into a negative power");
    out.push_back({t.mono.without(index) * m.pow(k), t.coeff * c.pow(k)});
  }
  return from_unsorted(std::move(out));
}

LaurentPoly LaurentPoly::divide_by_binomial(const GaussianRational& c, const Monomial& m) const {
  if (m.is_one()) {
    GaussianRational d = GaussianRational(1) - c;
    if (d.is_zero()) throw ZeroDivisor("division by the zero binomial 1 - 1");
    return scaled(d.inverse(), Monomial{});
  }
  if (is_zero()) return {};
  // Grade monomials by their pairing with m; (1 - c m) raises the grade of
  // a term by |m|^2 > 0, so long division proceeds from the lowest grade.
  auto grade = [&m](const Monomial& u) {
    long g = 0;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) g += long{u[i]} * long{m[i]};
    return g;
  };
  const long step = grade(m);
  std::map<long, LaurentPoly> buckets;
  long max_grade = 0;
  bool first = true;
  for (const auto& t : terms_) {
    long g = grade(t.mono);
    buckets[g] += LaurentPoly::term(t.coeff, t.mono);
    max_grade = first ? g : std::max(max_grade, g);
    first = false;
  }
  LaurentPoly quotient;
  while (!buckets.empty()) {
    auto it = buckets.begin();
    long g = it->first;
    LaurentPoly cur = std::move(it->second);
    buckets.erase(it);
    if (cur.is_zero()) continue;
    if (g > max_grade - step) throw InexactDivision("polynomial is not divisible by the binomial");
    buckets[g + step].add_scaled(cur, c, m);
    quotient += cur;
  }
  return quotient;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string LaurentPoly::str(const SymbolTable& symbols) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += t.coeff.str();
    } else if (t.coeff.is_one()) {
      out += symbols.format(t.mono);
    } else {
      out += t.coeff.str() + "*" + symbols.format(t.mono);
    }
  }
  return out;
}

}  // namespace qpsi::algebra
