#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qpsi/algebra/gaussian_rational.hpp"
#include "qpsi/algebra/monomial.hpp"

namespace qpsi::algebra {

// Sparse multivariate Laurent polynomial over Q(i).
//
// Terms are kept sorted by monomial with no zero coefficients, so equality
// is structural and multiplying by a single term preserves the order.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    GaussianRational coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(const GaussianRational& c);  // NOLINT(implicit)
  LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT(implicit)
  static LaurentPoly term(const GaussianRational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  GaussianRational coefficient(const Monomial& m) const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // Nonzero c * m, i.e. a unit of the Laurent polynomial ring.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_real() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // *this += c * m * r, by a single sorted merge.
  void add_scaled(const LaurentPoly& r, const GaussianRational& c, const Monomial& m);
  // c * m * (*this).
  LaurentPoly scaled(const GaussianRational& c, const Monomial& m) const;

  // Replace symbol `index` by c * m (m must not involve `index`).
  LaurentPoly substitute(std::size_t index, const GaussianRational& c, const Monomial& m) const;

  // Exact quotient by (1 - c*m), m != 1; throws InexactDivision when the
  // division leaves a remainder.
  LaurentPoly divide_by_binomial(const GaussianRational& c, const Monomial& m) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  std::string str(const SymbolTable& symbols) const;

 private:
  static LaurentPoly from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

}  // namespace qpsi::algebra
