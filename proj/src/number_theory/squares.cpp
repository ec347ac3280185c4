#include "qpsi/number_theory/squares.hpp"

#include <cmath>
#include <string>

#include "qpsi/errors.hpp"
#include "qpsi/identities/single.hpp"
#include "qpsi/qpoch/formal_product.hpp"

namespace qpsi::number_theory {

using algebra::FormalContext;
using algebra::GaussianRational;
using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::QLaurentSeries;
using algebra::QMonomial;
using algebra::SymbolTable;

namespace {

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Count count_tuples(long rest, int slots) {
  if (slots == 1) {
    if (rest == 0) return 1;
    const long r = isqrt(rest);
    return r * r == rest ? 2 : 0;
  }
  Count total = count_tuples(rest, slots - 1);
  for (long x = 1; x * x <= rest; ++x) total += 2 * count_tuples(rest - x * x, slots - 1);
  return total;
}

void require_positive(long n) {
  if (n < 1) throw InvalidArgument("divisor formulas need n >= 1, got " + std::to_string(n));
}

Count constant_count(const QLaurentSeries& s, int k) {
  const GaussianRational c = s.coefficient(k).coefficient(Monomial{});
  if (!c.is_real() || c.re().get_den() != 1) throw ThetaProductMismatch("non-integral coefficient at q^" + std::to_string(k));
  mpz_class v = c.re().get_num();
  if (k % 2 != 0) v = -v;
  if (v < 0) throw ThetaProductMismatch("negative count at q^" + std::to_string(k));
  return v.get_ui();
}

QLaurentSeries power(const QLaurentSeries& x, int s) {
  QLaurentSeries r = x;
  for (int i = 1; i < s; ++i) r = r * x;
  return r;
}

// sum_n r(n) (-q)^n for n < order.
QLaurentSeries signed_series(const algebra::ContextPtr& ctx, const std::vector<Count>& r, int order) {
  QLaurentSeries s(ctx, 0, order);
  for (int n = 0; n < order && n < static_cast<int>(r.size()); ++n) {
    long v = static_cast<long>(r[static_cast<std::size_t>(n)]);
    s.mutable_coefficient(n) = LaurentPoly(GaussianRational(mpq_class(n % 2 == 0 ? v : -v)));
  }
  return s;
}

struct Limit {
  QLaurentSeries lhs, rhs;
};

// Both Kronecker sides divided by (1 - alpha beta), then alpha, beta fixed.
Limit kronecker_at(int order, const GaussianRational& a, const GaussianRational& b) {
  auto ctx = FormalContext::make(SymbolTable{"alpha", "beta"}, order);
  auto [lhs, rhs] = identities::kronecker_cleared(ctx, order);
  const Monomial ab = ctx->symbols.var("alpha") * ctx->symbols.var("beta");
  auto fix = [&](const QLaurentSeries& x) {
    return x.divide_coefficients_by_binomial(GaussianRational(1), ab)
        .substitute("alpha", QMonomial::scalar(a))
        .substitute("beta", QMonomial::scalar(b));
  };
  return {fix(lhs), fix(rhs)};
}

identities::ResidualReport limit_report(const char* name, int s, int order, const GaussianRational& b) {
  Limit k = kronecker_at(order, GaussianRational(-1), b);
  std::vector<Count> formula(static_cast<std::size_t>(order), 1);
  for (int n = 1; n < order; ++n) formula[static_cast<std::size_t>(n)] = *rs_formula(n, s);
  const auto& ctx = k.lhs.context();
  auto r = identities::formal_report(name, "divisor rearrangement", k.lhs, signed_series(ctx, formula, order), order);
  r.parameters = {{"a", "-1"}, {"b", b.str()}};
  auto check = [&](const QLaurentSeries& other, const char* what) {
    auto cmp = algebra::equal_to_order(k.lhs, other, order);
    if (cmp.equal) return;
    r.pass = false;
    if (!r.first_difference || *cmp.first_difference < *r.first_difference) {
      const int at = *cmp.first_difference;
      r.first_difference = at;
      r.offending_coefficient = (k.lhs.coefficient(at) - other.coefficient(at)).str(ctx->symbols);
      r.residual = r.offending_coefficient;
    }
    r.note += std::string(r.note.empty() ? "" : "; ") + "differs from " + what;
  };
  check(k.rhs, "the product side");
  check(signed_series(ctx, rs_from_theta(s, order - 1).counts, order), "the theta power");
  return r;
}

}  // namespace

Count rs_bruteforce(long n, int s) {
  if (n < 0 || s < 1) throw InvalidArgument("rs_bruteforce needs n >= 0 and s >= 1");
  return count_tuples(n, s);
}

Count r4_divisor(long n) {
  require_positive(n);
  Count sum = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0 && d % 4 != 0) sum += static_cast<Count>(d);
  }
  return 8 * sum;
}

Count r2_divisor(long n) {
  require_positive(n);
  long d1 = 0, d3 = 0;
  for (long d = 1; d <= n; d += 2) {
    if (n % d != 0) continue;
    (d % 4 == 1 ? d1 : d3) += 1;
  }
  return static_cast<Count>(4 * (d1 - d3));
}

std::optional<Count> rs_formula(long n, int s) {
  if (n == 0) return 1;
  if (s == 2) return r2_divisor(n);
  if (s == 4) return r4_divisor(n);
  return std::nullopt;
}

RepCountTable rs_from_theta(int s, long max_n) {
  if (s < 1 || max_n < 0) throw InvalidArgument("rs_from_theta needs s >= 1 and M >= 0");
  const int order = static_cast<int>(max_n) + 1;
  auto ctx = FormalContext::make(SymbolTable{}, order);

  std::vector<std::pair<int, LaurentPoly>> terms;
  for (long m = -isqrt(max_n); m <= isqrt(max_n); ++m) {
    terms.emplace_back(static_cast<int>(m * m), LaurentPoly(GaussianRational(m % 2 == 0 ? 1 : -1)));
  }
  QLaurentSeries lacunary = power(QLaurentSeries::polynomial(ctx, terms, order), s);

  qpoch::FormalProduct eta;
  eta.mul_poch_infinite(QMonomial::q_power(1));
  eta.div_poch_infinite(QMonomial{GaussianRational(-1), Monomial{}, 1});
  QLaurentSeries product = power(eta.expand(ctx, order), s);

  auto cmp = algebra::equal_to_order(lacunary, product, order);
  if (!cmp.equal) {
    throw ThetaProductMismatch("theta power and product form differ at q^" + std::to_string(*cmp.first_difference));
  }
  RepCountTable t{s, max_n, {}};
  for (int k = 0; k < order; ++k) t.counts.push_back(constant_count(lacunary, k));
  return t;
}

identities::ResidualReport kronecker_limit_foursquare(int order) {
  return limit_report("four-square", 4, order, GaussianRational(-1));
}

identities::ResidualReport kronecker_limit_twosquare(int order) {
  return limit_report("two-square", 2, order, GaussianRational::i());
}

}  // namespace qpsi::number_theory
