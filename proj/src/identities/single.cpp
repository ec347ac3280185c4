#include "qpsi/identities/single.hpp"

#include <random>

#include "qpsi/errors.hpp"
#include "qpsi/qpoch/formal.hpp"
#include "qpsi/qpoch/numeric.hpp"

namespace qpsi::identities {

using algebra::FormalContext;
using algebra::GaussianRational;
using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::SymbolTable;
using numerics::RatioBound;
using qpoch::FormalProduct;

namespace {

const BigFloat& one() {
  static thread_local BigFloat v(1L);
  return v;
}

// Value far above any ratio target, for indices where a bound is not yet valid.
BigFloat no_bound() { return BigFloat(10L); }

BigFloat half_way_to_one(const BigFloat& r) { return (one() + r) / BigFloat(2L); }

Estimate poch_inf(const BigComplex& x, const BigFloat& q, const BigFloat& tol) {
  return numerics::eval_poch_infinite(x, q, tol);
}

// Tolerance handed to infinite products inside a summand.
BigFloat inner_tol(const BigFloat& tol) { return tol * BigFloat("1e-12"); }

QMonomial sym(const SymbolTable& t, const char* name, int qexp) { return {GaussianRational(1), t.var(name), qexp}; }

void add_param(ResidualReport& r, std::string name, std::string value) {
  r.parameters.emplace_back(std::move(name), std::move(value));
}

}  // namespace

std::string describe(const QMonomial& m, const SymbolTable& symbols) { return m.str(symbols); }
std::string describe(const BigComplex& z) { return z.str(20); }
std::string describe(const BigFloat& x) { return x.str(20); }

// ---------------------------------------------------------------- 1psi1

Psi11Formal psi11_canonical(int order) {
  auto ctx = FormalContext::make(SymbolTable{"alpha", "beta", "zeta"}, order);
  const auto& s = ctx->symbols;
  return {ctx, sym(s, "alpha", 0), sym(s, "beta", 2), sym(s, "zeta", 1), order};
}

Psi11Formal psi11_ismail(int k, int order) {
  auto ctx = FormalContext::make(SymbolTable{"alpha", "zeta"}, order);
  const auto& s = ctx->symbols;
  return {ctx, sym(s, "alpha", -k), QMonomial::q_power(k + 1), sym(s, "zeta", 1), order};
}

FormalProduct psi11_term(const QMonomial& a, const QMonomial& b, const QMonomial& z, long n) {
  FormalProduct p;
  p.mul_poch(a, static_cast<int>(n));
  p.div_poch(b, static_cast<int>(n));
  p.mul_monomial(z.pow(static_cast<int>(n)));
  return p;
}

FormalProduct psi11_product(const QMonomial& a, const QMonomial& b, const QMonomial& z) {
  const QMonomial q = QMonomial::q_power(1);
  const QMonomial az = a * z;
  FormalProduct p;
  p.mul_poch_infinite(q);
  if (!b.is_zero()) p.mul_poch_infinite(b * a.inverse());
  p.mul_poch_infinite(az);
  p.mul_poch_infinite(q * az.inverse());
  if (!b.is_zero()) p.div_poch_infinite(b);
  p.div_poch_infinite(q * a.inverse());
  p.div_poch_infinite(z);
  if (!b.is_zero()) p.div_poch_infinite(b * az.inverse());
  return p;
}

void check_psi11_scheme(const Psi11Formal& p) {
  if (p.z.qexp < 1) throw RegionViolation("formal 1psi1 needs z of positive q-order");
  if (p.b.is_zero()) return;
  const bool terminating = p.b.coeff.is_one() && p.b.mono.is_one() && p.b.qexp >= 1;
  if (!terminating && (p.b * (p.a * p.z).inverse()).qexp < 1) {
    throw RegionViolation("formal 1psi1 needs b/(az) of positive q-order");
  }
}

FormalSum psi11_sum_formal(const Psi11Formal& p) {
  return formal_lattice_sum(
      p.ctx, 1, [&](const std::vector<long>& r) { return psi11_term(p.a, p.b, p.z, r[0]); }, p.order,
      default_radius_cap(p.order));
}

ResidualReport verify_1psi1_formal(const Psi11Formal& p, std::string instance) {
  check_psi11_scheme(p);
  FormalSum lhs = psi11_sum_formal(p);
  QLaurentSeries rhs = psi11_product(p.a, p.b, p.z).expand(p.ctx, p.order);
  ResidualReport r = formal_report("1psi1", std::move(instance), lhs.sum, rhs, p.order);
  add_param(r, "a", describe(p.a, p.ctx->symbols));
  add_param(r, "b", describe(p.b, p.ctx->symbols));
  add_param(r, "z", describe(p.z, p.ctx->symbols));
  return r;
}

void check_psi11_region(const Psi11Numeric& p) {
  if (!(p.q.sign() > 0 && p.q < one())) throw RegionViolation("q must lie in (0, 1)");
  if (p.a.is_zero()) throw RegionViolation("1psi1 needs a != 0");
  const BigFloat az = p.z.abs();
  if (!(az < one())) throw RegionViolation("1psi1 needs |z| < 1");
  if (!(p.b.abs() < az * p.a.abs())) throw RegionViolation("1psi1 needs |b/a| < |z|");
}

numerics::BilateralSum psi11_sum_numeric(const Psi11Numeric& p, const BigFloat& tol) {
  check_psi11_region(p);
  const BigFloat ma = p.a.abs(), mb = p.b.abs(), mz = p.z.abs();
  auto term = [&](long n) {
    BigComplex rb = qpoch::poch_finite_reciprocal(p.b, n, p.q);
    if (rb.is_zero()) return BigComplex(0L);
    return qpoch::poch_finite(p.a, n, p.q) * rb * numerics::pow(p.z, n);
  };
  RatioBound fwd = numerics::find_ratio_bound(
      [&](long n) {
        BigFloat qn = pow(p.q, n);
        if (!(mb * qn < one())) return no_bound();
        return mz * (one() + ma * qn) / (one() - mb * qn);
      },
      half_way_to_one(mz));
  RatioBound bwd = numerics::find_ratio_bound(
      [&](long j) {
        BigFloat qj = pow(p.q, j + 1);
        if (!(qj < ma)) return no_bound();
        return (mb + qj) / (mz * (ma - qj));
      },
      half_way_to_one(mb / (ma * mz)));
  return numerics::eval_bilateral(term, fwd, bwd, tol);
}

Estimate psi11_product_numeric(const Psi11Numeric& p, const BigFloat& tol) {
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q), az = p.a * p.z;
  Estimate num = poch_inf(q, p.q, t) * poch_inf(p.b / p.a, p.q, t) * poch_inf(az, p.q, t) * poch_inf(q / az, p.q, t);
  Estimate den = poch_inf(p.b, p.q, t) * poch_inf(q / p.a, p.q, t) * poch_inf(p.z, p.q, t) *
                 poch_inf(p.b / az, p.q, t);
  return num / den;
}

ResidualReport verify_1psi1_numeric(const Psi11Numeric& p, const BigFloat& tol, std::string instance) {
  auto lhs = psi11_sum_numeric(p, tol);
  auto rhs = psi11_product_numeric(p, tol);
  ResidualReport r = numeric_report("1psi1", std::move(instance), lhs.sum, rhs, tol);
  add_param(r, "q", describe(p.q));
  add_param(r, "a", describe(p.a));
  add_param(r, "b", describe(p.b));
  add_param(r, "z", describe(p.z));
  return r;
}

// ----------------------------------------------------------- q-binomial

QBinomialFormal qbinomial_canonical(int order) {
  auto ctx = FormalContext::make(SymbolTable{"alpha", "zeta"}, order);
  const auto& s = ctx->symbols;
  return {ctx, sym(s, "alpha", 0), sym(s, "zeta", 1), order};
}

FormalSum qbinomial_sum_formal(const QBinomialFormal& p) {
  if (p.z.qexp < 1) throw RegionViolation("formal q-binomial needs z of positive q-order");
  // One-sided: n < 0 lies outside the support.
  return formal_lattice_sum(
      p.ctx, 1,
      [&](const std::vector<long>& r) {
        if (r[0] < 0) return FormalProduct(QMonomial::scalar(0));
        FormalProduct t;
        t.mul_poch(p.a, static_cast<int>(r[0]));
        t.div_poch(QMonomial::q_power(1), static_cast<int>(r[0]));
        t.mul_monomial(p.z.pow(static_cast<int>(r[0])));
        return t;
      },
      p.order, default_radius_cap(p.order));
}

ResidualReport verify_qbinomial_formal(const QBinomialFormal& p, std::string instance) {
  FormalSum lhs = qbinomial_sum_formal(p);
  FormalProduct rhs;
  rhs.mul_poch_infinite(p.a * p.z);
  rhs.div_poch_infinite(p.z);
  ResidualReport r = formal_report("q-binomial", std::move(instance), lhs.sum, rhs.expand(p.ctx, p.order), p.order);
  add_param(r, "a", describe(p.a, p.ctx->symbols));
  add_param(r, "z", describe(p.z, p.ctx->symbols));
  return r;
}

ResidualReport verify_qbinomial_numeric(const QBinomialNumeric& p, const BigFloat& tol, std::string instance) {
  const BigFloat mz = p.z.abs(), ma = p.a.abs();
  if (!(mz < one())) throw RegionViolation("q-binomial needs |z| < 1");
  auto term = [&](long n) {
    return qpoch::poch_finite(p.a, n, p.q) / qpoch::poch_finite(BigComplex(p.q), n, p.q) * numerics::pow(p.z, n);
  };
  RatioBound fwd = numerics::find_ratio_bound(
      [&](long n) { return mz * (one() + ma * pow(p.q, n)) / (one() - pow(p.q, n + 1)); }, half_way_to_one(mz));
  auto lhs = numerics::eval_unilateral(term, fwd, tol);
  const BigFloat t = inner_tol(tol);
  Estimate rhs = poch_inf(p.a * p.z, p.q, t) / poch_inf(p.z, p.q, t);
  ResidualReport r = numeric_report("q-binomial", std::move(instance), lhs.sum, rhs, tol);
  add_param(r, "q", describe(p.q));
  add_param(r, "a", describe(p.a));
  add_param(r, "z", describe(p.z));
  return r;
}

// ------------------------------------------------------- triple product

TripleFormal triple_canonical(int order, int s) {
  if (s < 1) throw RegionViolation("triple product scheme needs z = zeta q^s with s >= 1");
  auto ctx = FormalContext::make(SymbolTable{"zeta"}, order);
  return {ctx, sym(ctx->symbols, "zeta", s), order};
}

FormalSum triple_sum_formal(const TripleFormal& p) {
  return formal_lattice_sum(
      p.ctx, 1,
      [&](const std::vector<long>& r) {
        const int n = static_cast<int>(r[0]);
        QMonomial t = p.z.pow(n);
        t.qexp += n * (n - 1) / 2;
        if (n % 2 != 0) t.coeff = -t.coeff;
        return FormalProduct(t);
      },
      p.order, default_radius_cap(p.order));
}

ResidualReport verify_triple_product_formal(const TripleFormal& p, std::string instance) {
  if (p.z.qexp < 1) throw RegionViolation("formal triple product needs z of positive q-order");
  FormalSum lhs = triple_sum_formal(p);
  FormalProduct rhs;
  rhs.mul_poch_infinite(p.z);
  rhs.mul_poch_infinite(QMonomial::q_power(1) * p.z.inverse());
  rhs.mul_poch_infinite(QMonomial::q_power(1));
  ResidualReport r =
      formal_report("triple-product", std::move(instance), lhs.sum, rhs.expand(p.ctx, p.order), p.order);
  add_param(r, "z", describe(p.z, p.ctx->symbols));
  return r;
}

QLaurentSeries triple_from_1psi1(const ContextPtr& ctx, int order) {
  const auto& s = ctx->symbols;
  const QMonomial a{GaussianRational(1), s.var("alpha", -1), 0};
  const QMonomial z{GaussianRational(1), s.var("alpha") * s.var("zeta"), 1};
  const QMonomial b = QMonomial::scalar(0);
  FormalSum lhs = formal_lattice_sum(
      ctx, 1, [&](const std::vector<long>& r) { return psi11_term(a, b, z, r[0]); }, order, default_radius_cap(order));
  QLaurentSeries rhs = psi11_product(a, b, z).expand(ctx, order);
  auto cmp = algebra::equal_to_order(lhs.sum, rhs, order);
  if (!cmp.equal) throw Error("1psi1 with b = 0 failed before the alpha -> 0 limit");
  return lhs.sum.substitute("alpha", QMonomial::scalar(0));
}

numerics::BilateralSum triple_sum_numeric(const BigComplex& z, const BigFloat& q, const BigFloat& tol) {
  if (z.is_zero()) throw RegionViolation("triple product needs z != 0");
  const BigFloat mz = z.abs();
  auto term = [&](long n) {
    BigComplex t = numerics::pow(z, n) * BigComplex(pow(q, n * (n - 1) / 2));
    return n % 2 == 0 ? t : -t;
  };
  const BigFloat half("0.5");
  RatioBound fwd = numerics::find_ratio_bound([&](long n) { return mz * pow(q, n); }, half);
  RatioBound bwd = numerics::find_ratio_bound([&](long j) { return pow(q, j + 1) / mz; }, half);
  return numerics::eval_bilateral(term, fwd, bwd, tol);
}

ResidualReport verify_triple_product_numeric(const BigComplex& z, const BigFloat& q, const BigFloat& tol,
                                             std::string instance) {
  auto lhs = triple_sum_numeric(z, q, tol);
  auto rhs = qpoch::theta(z, q, inner_tol(tol));
  ResidualReport r = numeric_report("triple-product", std::move(instance), lhs.sum, rhs, tol);
  add_param(r, "q", describe(q));
  add_param(r, "z", describe(z));
  return r;
}

// ------------------------------------------------------ q-beta integral

namespace {

void check_qbeta(const QBetaNumeric& p) {
  if (!(p.alpha.sign() > 0 && p.beta.sign() > 0)) throw RegionViolation("q-beta integral needs alpha, beta > 0");
  if (!(p.q.sign() > 0 && p.q < one())) throw RegionViolation("q must lie in (0, 1)");
  if (p.c.is_zero()) throw RegionViolation("q-beta integral needs c != 0");
}

}  // namespace

Estimate qbeta_integral_side(const QBetaNumeric& p, const BigFloat& tol) {
  check_qbeta(p);
  const BigFloat t = inner_tol(tol);
  const BigComplex ab(p.alpha + p.beta);
  const BigComplex am1(p.alpha - one());
  const BigFloat mc = p.c.abs();
  BigFloat integrand_error(0L);
  auto f = [&](const BigComplex& x) {
    Estimate d = qpoch::poch_general(-x, ab, p.q, t);
    Estimate v = Estimate{numerics::pow(x, am1), BigFloat(0L)} / d;
    integrand_error += v.error * x.abs();
    return v.value;
  };
  const BigFloat qa = pow(p.q, p.alpha);
  const BigFloat qab = pow(p.q, p.alpha + p.beta);
  RatioBound fwd = numerics::find_ratio_bound(
      [&](long n) {
        BigFloat qn = pow(p.q, n);
        if (!(mc * qn * qab < one())) return no_bound();
        return qa * (one() + mc * qn) / (one() - mc * qn * qab);
      },
      half_way_to_one(qa));
  RatioBound bwd = numerics::find_ratio_bound(
      [&](long j) {
        BigFloat w = mc / pow(p.q, j + 1);
        if (!(w > one())) return no_bound();
        return (qab + one() / w) / (qa * (one() - one() / w));
      },
      half_way_to_one(pow(p.q, p.beta)));
  auto s = qpoch::jackson_qintegral(f, p.c, p.q, fwd, bwd, tol);
  s.value.error += integrand_error * (one() - p.q);
  return s.value;
}

Estimate qbeta_product_side(const QBetaNumeric& p, const BigFloat& tol) {
  check_qbeta(p);
  const BigFloat t = inner_tol(tol);
  const BigComplex ca = numerics::pow(p.c, BigComplex(p.alpha));
  Estimate th = qpoch::theta(-p.c * BigComplex(pow(p.q, p.alpha)), p.q, t) / qpoch::theta(-p.c, p.q, t);
  Estimate g = qpoch::q_gamma(p.alpha, p.q, t) * qpoch::q_gamma(p.beta, p.q, t) /
               qpoch::q_gamma(p.alpha + p.beta, p.q, t);
  return numerics::scale(th * g, ca);
}

Estimate qbeta_via_1psi1(const QBetaNumeric& p, const BigFloat& tol) {
  check_qbeta(p);
  const BigFloat t = inner_tol(tol);
  Psi11Numeric psi{-p.c, -p.c * BigComplex(pow(p.q, p.alpha + p.beta)), BigComplex(pow(p.q, p.alpha)), p.q};
  auto sum = psi11_sum_numeric(psi, t);
  Estimate pre = Estimate{numerics::pow(p.c, BigComplex(p.alpha)) * BigComplex(one() - p.q), BigFloat(0L)} /
                 qpoch::poch_general(-p.c, BigComplex(p.alpha + p.beta), p.q, t);
  return pre * sum.sum;
}

ResidualReport verify_qbeta_integral(const QBetaNumeric& p, const BigFloat& tol, std::string instance) {
  Estimate lhs = qbeta_integral_side(p, tol);
  Estimate rhs = qbeta_product_side(p, tol);
  ResidualReport r = numeric_report("q-beta-integral", std::move(instance), lhs, rhs, tol);
  add_param(r, "alpha", describe(p.alpha));
  add_param(r, "beta", describe(p.beta));
  add_param(r, "c", describe(p.c));
  add_param(r, "q", describe(p.q));
  return r;
}

// ------------------------------------------------------------ Kronecker

std::pair<QLaurentSeries, QLaurentSeries> kronecker_cleared(const ContextPtr& ctx, int order) {
  const auto& s = ctx->symbols;
  const Monomial a = s.var("alpha"), b = s.var("beta");
  const LaurentPoly one_minus_ab = LaurentPoly(1) - LaurentPoly::term(1, a * b);
  const LaurentPoly prefactor = (LaurentPoly(1) - LaurentPoly::term(1, a)) * (LaurentPoly(1) - LaurentPoly::term(1, b));

  QLaurentSeries lhs(ctx, 0, order);
  if (order > 0) lhs.mutable_coefficient(0) = one_minus_ab;
  for (int k = 1; k < order; ++k) {
    for (int n = 1; k * n < order; ++n) {
      LaurentPoly t = LaurentPoly::term(1, a.pow(k) * b.pow(n)) - LaurentPoly::term(1, a.pow(-k) * b.pow(-n));
      lhs.mutable_coefficient(k * n) += prefactor * t;
    }
  }

  const QMonomial q = QMonomial::q_power(1);
  const QMonomial qa{GaussianRational(1), a, 1}, qb{GaussianRational(1), b, 1};
  FormalProduct p;
  p.mul_binomial(QMonomial{GaussianRational(1), a * b, 0});
  p.mul_poch_infinite(qa * QMonomial{GaussianRational(1), b, 0});
  p.mul_poch_infinite(q * QMonomial{GaussianRational(1), (a * b).inverse(), 0});
  p.mul_poch_infinite(q);
  p.mul_poch_infinite(q);
  p.div_poch_infinite(qa);
  p.div_poch_infinite(q * QMonomial{GaussianRational(1), a.inverse(), 0});
  p.div_poch_infinite(qb);
  p.div_poch_infinite(q * QMonomial{GaussianRational(1), b.inverse(), 0});
  return {std::move(lhs), p.expand(ctx, order)};
}

ResidualReport verify_kronecker_formal(int order) {
  auto ctx = FormalContext::make(SymbolTable{"alpha", "beta"}, order);
  auto [lhs, rhs] = kronecker_cleared(ctx, order);
  ResidualReport r = formal_report("kronecker", "cleared (1-ab)", lhs, rhs, order);
  add_param(r, "a", "alpha");
  add_param(r, "b", "beta");
  return r;
}

namespace {

void check_kronecker(const KroneckerNumeric& p) {
  const BigFloat ma = p.a.abs(), mb = p.b.abs();
  if (!(p.q < ma && ma < one() && p.q < mb && mb < one())) {
    throw RegionViolation("Kronecker check needs q < |a|, |b| < 1");
  }
}

}  // namespace

Estimate kronecker_sum_side(const KroneckerNumeric& p, const BigFloat& tol) {
  check_kronecker(p);
  const BigFloat ma = p.a.abs(), mb = p.b.abs();
  const BigFloat aq = ma * p.q, qa = p.q / ma;
  // sum_{k,n>=1} q^{kn} a^k b^n, summed over n in closed form.
  auto u = [&](long m) {
    const long k = m + 1;
    BigComplex qkb = p.b * BigComplex(pow(p.q, k));
    return numerics::pow(p.a * BigComplex(p.q), k) * p.b / (BigComplex(1L) - qkb);
  };
  auto v = [&](long m) {
    const long k = m + 1;
    BigComplex qk_b = BigComplex(pow(p.q, k)) / p.b;
    return numerics::pow(BigComplex(p.q) / p.a, k) / p.b / (BigComplex(1L) - qk_b);
  };
  RatioBound ru = numerics::find_ratio_bound(
      [&](long m) {
        const long k = m + 1;
        return aq * (one() + mb * pow(p.q, k)) / (one() - mb * pow(p.q, k + 1));
      },
      half_way_to_one(aq));
  RatioBound rv = numerics::find_ratio_bound(
      [&](long m) {
        const long k = m + 1;
        BigFloat x = pow(p.q, k + 1) / mb;
        if (!(x < one())) return no_bound();
        return qa * (one() + pow(p.q, k) / mb) / (one() - x);
      },
      half_way_to_one(qa));
  auto su = numerics::eval_unilateral(u, ru, tol / BigFloat(4L));
  auto sv = numerics::eval_unilateral(v, rv, tol / BigFloat(4L));
  const BigComplex pre = (BigComplex(1L) - p.a) * (BigComplex(1L) - p.b) / (BigComplex(1L) - p.a * p.b);
  return Estimate{BigComplex(1L), BigFloat(0L)} + numerics::scale(su.sum - sv.sum, pre);
}

Estimate kronecker_product_side(const KroneckerNumeric& p, const BigFloat& tol) {
  check_kronecker(p);
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q), ab = p.a * p.b;
  Estimate num = poch_inf(ab * q, p.q, t) * poch_inf(q / ab, p.q, t) * poch_inf(q, p.q, t) * poch_inf(q, p.q, t);
  Estimate den = poch_inf(p.a * q, p.q, t) * poch_inf(q / p.a, p.q, t) * poch_inf(p.b * q, p.q, t) *
                 poch_inf(q / p.b, p.q, t);
  return num / den;
}

ResidualReport verify_kronecker_numeric(const KroneckerNumeric& p, const BigFloat& tol, std::string instance) {
  ResidualReport r =
      numeric_report("kronecker", std::move(instance), kronecker_sum_side(p, tol), kronecker_product_side(p, tol), tol);
  add_param(r, "q", describe(p.q));
  add_param(r, "a", describe(p.a));
  add_param(r, "b", describe(p.b));
  return r;
}

// -------------------------------------------------------- Guo-Schlosser

void check_guo_schlosser_region(const GuoSchlosserNumeric& p) {
  if (!(p.q.sign() > 0 && p.q < one())) throw RegionViolation("q must lie in (0, 1)");
  if (p.a.is_zero() || p.c.is_zero()) throw RegionViolation("Guo-Schlosser needs a, c != 0");
  const BigFloat mz = p.z.abs();
  if (!(mz < one())) throw RegionViolation("Guo-Schlosser needs |z| < 1");
  if (!(p.b.abs() < mz * (p.a * p.c).abs())) throw RegionViolation("Guo-Schlosser needs |b/ac| < |z|");
}

numerics::BilateralSum guo_schlosser_sum(const GuoSchlosserNumeric& p, const BigFloat& tol) {
  check_guo_schlosser_region(p);
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q);
  BigFloat product_error(0L);
  auto term = [&](long k) {
    const BigComplex qk(pow(p.q, k));
    const BigComplex azqk = p.a * p.z * qk;
    const BigComplex den = BigComplex(1L) - azqk;
    if (den.abs() < tol) throw FactorNearZero("1 - a z q^k vanishes numerically at k=" + std::to_string(k));
    const BigComplex ck = p.z * (BigComplex(1L) - azqk * p.c) / den;
    const BigComplex ack = p.a * ck;
    BigComplex lead = qpoch::poch_finite(p.a, k, p.q) * qpoch::poch_finite_reciprocal(p.b, k, p.q) *
                      (BigComplex(1L) - ack * qk) / den * numerics::pow(ck, k);
    if (lead.is_zero()) return lead;
    Estimate prods = poch_inf(ck * q, p.q, t) * poch_inf(p.b / ack, p.q, t) /
                     (poch_inf(ack, p.q, t) * poch_inf(q / ack, p.q, t));
    Estimate v = numerics::scale(prods, lead);
    product_error += v.error;
    return v.value;
  };
  const BigFloat ma = p.a.abs(), mb = p.b.abs(), mz = p.z.abs(), mc = p.c.abs();
  const BigFloat maz = ma * mz, macz = maz * mc;
  BigFloat d = max(max(one(), ma), max(maz, macz));
  d = max(d, max(one() / maz, one() / macz));
  d *= BigFloat(16L);
  // Asymptotic 1psi1 ratios, widened by the O(k q^k) drift of c_k.
  auto widen = [&](const BigFloat& base, long k) {
    BigFloat delta = d * BigFloat(k + 2) * pow(p.q, k);
    if (!(delta * BigFloat(2L) < one())) return no_bound();
    return base * (one() + delta) / (one() - delta);
  };
  RatioBound fwd = numerics::find_ratio_bound(
      [&](long k) {
        BigFloat qk = pow(p.q, k);
        if (!(mb * qk < one())) return no_bound();
        return widen(mz * (one() + ma * qk) / (one() - mb * qk), k);
      },
      half_way_to_one(mz));
  RatioBound bwd = numerics::find_ratio_bound(
      [&](long j) {
        BigFloat qj = pow(p.q, j + 1);
        if (!(qj < ma)) return no_bound();
        return widen((mb + qj) / (mz * mc * (ma - qj)), j);
      },
      half_way_to_one(mb / macz));
  auto s = numerics::eval_bilateral(term, fwd, bwd, tol);
  s.sum.error += product_error;
  return s;
}

Estimate guo_schlosser_product(const GuoSchlosserNumeric& p, const BigFloat& tol) {
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q);
  Estimate num = poch_inf(q, p.q, t) * poch_inf(p.b / p.a, p.q, t);
  Estimate den = poch_inf(q / p.a, p.q, t) * poch_inf(p.b, p.q, t);
  return numerics::scale(num / den, BigComplex(1L) / (BigComplex(1L) - p.z));
}

ResidualReport verify_guo_schlosser(const GuoSchlosserNumeric& p, const BigFloat& tol, std::string instance) {
  auto lhs = guo_schlosser_sum(p, tol);
  ResidualReport r = numeric_report("guo-schlosser", std::move(instance), lhs.sum, guo_schlosser_product(p, tol), tol);
  add_param(r, "q", describe(p.q));
  add_param(r, "a", describe(p.a));
  add_param(r, "b", describe(p.b));
  add_param(r, "c", describe(p.c));
  add_param(r, "z", describe(p.z));
  return r;
}

ResidualReport guo_schlosser_c1_consistency(const GuoSchlosserNumeric& p, const BigFloat& tol) {
  GuoSchlosserNumeric c1 = p;
  c1.c = BigComplex(1L);
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q), az = p.a * p.z;
  auto gs = guo_schlosser_sum(c1, tol);
  Estimate scale = poch_inf(az, p.q, t) * poch_inf(q / az, p.q, t) /
                   (poch_inf(p.z * q, p.q, t) * poch_inf(p.b / az, p.q, t));
  auto psi = psi11_sum_numeric({p.a, p.b, p.z, p.q}, tol);
  ResidualReport r = numeric_report("guo-schlosser", "c=1 against 1psi1", gs.sum * scale, psi.sum, tol);
  add_param(r, "q", describe(p.q));
  add_param(r, "a", describe(p.a));
  add_param(r, "b", describe(p.b));
  add_param(r, "c", "1");
  add_param(r, "z", describe(p.z));
  return r;
}

std::vector<GuoSchlosserNumeric> guo_schlosser_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  // Four-digit decimals, so the parameters print exactly.
  auto draw = [&rng](long lo, long hi) {
    const long span = hi - lo;
    return BigFloat(mpq_class(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(span + 1)), 10000));
  };
  std::vector<GuoSchlosserNumeric> out;
  for (std::size_t i = 0; i < count; ++i) {
    BigFloat q = draw(1000, 2000);
    BigFloat a = draw(20000, 30000);
    BigFloat c = draw(8000, 11000);
    BigFloat z = draw(1500, 2800);
    BigFloat f = draw(1000, 5000);
    out.push_back({BigComplex(a), BigComplex(f * a * c * z), BigComplex(c), BigComplex(z), q});
  }
  return out;
}

}  // namespace qpsi::identities
