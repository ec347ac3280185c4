#include "doctest.h"
#include "qpsi/errors.hpp"
#include "qpsi/identities/single.hpp"
#include "qpsi/qpoch/formal.hpp"
#include "qpsi/qpoch/numeric.hpp"

using namespace qpsi;
using namespace qpsi::algebra;
using namespace qpsi::identities;
using numerics::BigComplex;
using numerics::BigFloat;

namespace {

const BigFloat kTol("1e-25");

BigFloat residual(const ResidualReport& r) { return BigFloat(r.residual); }

QMonomial sym(const SymbolTable& t, const char* name, int qexp = 0) { return {GaussianRational(1), t.var(name), qexp}; }

}  // namespace

TEST_CASE("1psi1 formal") {
  auto p = psi11_canonical(30);
  auto r = verify_1psi1_formal(p);
  CHECK(r.pass);
  CHECK(r.residual == "0");
  CHECK(!r.first_difference);

  SUBCASE("scheme violations") {
    auto bad = p;
    bad.z = sym(p.ctx->symbols, "zeta");
    CHECK_THROWS_AS(verify_1psi1_formal(bad), RegionViolation);
    bad = p;
    bad.b = sym(p.ctx->symbols, "beta");
    CHECK_THROWS_AS(verify_1psi1_formal(bad), RegionViolation);
  }

  SUBCASE("a broken identity is reported with its first difference") {
    auto q = psi11_sum_formal(p).sum;
    auto rhs = psi11_product(p.a, p.b, p.z).expand(p.ctx, 30);
    rhs.mutable_coefficient(7) += LaurentPoly(1);
    auto bad = formal_report("1psi1", "perturbed", q, rhs, 30);
    CHECK(!bad.pass);
    REQUIRE(bad.first_difference);
    CHECK(*bad.first_difference == 7);
    CHECK(bad.offending_coefficient == "-1");
  }
}

TEST_CASE("b = q gives the q-binomial theorem") {
  auto base = qbinomial_canonical(30);
  Psi11Formal p{base.ctx, base.a, QMonomial::q_power(1), base.z, 30};
  CHECK(verify_1psi1_formal(p).pass);
  CHECK(verify_qbinomial_formal(base).pass);

  for (long n = -6; n <= 6; ++n) {
    auto t = psi11_term(p.a, p.b, p.z, n);
    if (n < 0) {
      CHECK(t.is_zero());
      continue;
    }
    qpoch::FormalProduct u;
    u.mul_poch(base.a, static_cast<int>(n));
    u.div_poch(QMonomial::q_power(1), static_cast<int>(n));
    u.mul_monomial(base.z.pow(static_cast<int>(n)));
    CHECK(equal_to_order(t.expand(p.ctx, 30), u.expand(p.ctx, 30), 30).equal);
  }
  CHECK(equal_to_order(psi11_sum_formal(p).sum, qbinomial_sum_formal(base).sum, 30).equal);
}

TEST_CASE("1psi1 at b = q^{k+1}, a -> a q^{-k}") {
  for (int k = 0; k <= 2; ++k) {
    CAPTURE(k);
    auto r = verify_1psi1_formal(psi11_ismail(k, 25));
    CHECK(r.pass);
    CHECK(r.residual == "0");
  }
}

TEST_CASE("1psi1 numeric") {
  Psi11Numeric p{BigComplex(2L), BigComplex(BigFloat("0.1")), BigComplex(BigFloat("0.4")), BigFloat("0.3")};
  auto r = verify_1psi1_numeric(p, kTol);
  CHECK(r.pass);
  CHECK(residual(r) < kTol);

  auto far = p;
  far.z = BigComplex(BigFloat("0.04"));
  CHECK_THROWS_AS(verify_1psi1_numeric(far, kTol), RegionViolation);
  far.z = BigComplex(BigFloat("1.1"));
  CHECK_THROWS_AS(verify_1psi1_numeric(far, kTol), RegionViolation);
}

TEST_CASE("every numeric check holds at two precisions") {
  Psi11Numeric p{BigComplex(2L), BigComplex(BigFloat("0.1")), BigComplex(BigFloat("0.4")), BigFloat("0.3")};
  ResidualReport lo;
  {
    numerics::PrecisionScope s(128);
    Psi11Numeric p128{BigComplex(2L), BigComplex(BigFloat("0.1")), BigComplex(BigFloat("0.4")), BigFloat("0.3")};
    lo = verify_1psi1_numeric(p128, BigFloat("1e-25"));
  }
  numerics::PrecisionScope s(320);
  Psi11Numeric p320{BigComplex(2L), BigComplex(BigFloat("0.1")), BigComplex(BigFloat("0.4")), BigFloat("0.3")};
  auto hi = verify_1psi1_numeric(p320, BigFloat("1e-80"));
  CHECK(lo.pass);
  CHECK(hi.pass);
  CHECK(residual(hi) < BigFloat("1e-80"));
}

TEST_CASE("q-binomial") {
  SUBCASE("formal a = alpha, z = zeta q") {
    auto r = verify_qbinomial_formal(qbinomial_canonical(30));
    CHECK(r.pass);
    CHECK(r.residual == "0");
  }
  SUBCASE("a = q telescopes to 1/(1 - z)") {
    auto p = qbinomial_canonical(20);
    p.a = QMonomial::q_power(1);
    auto lhs = qbinomial_sum_formal(p).sum;
    auto expect = QLaurentSeries::one(p.ctx, 20);
    expect.div_binomial(p.z);
    CHECK(equal_to_order(lhs, expect, 20).equal);

    QBinomialNumeric n{BigComplex(BigFloat("0.3")), BigComplex(BigFloat("0.6")), BigFloat("0.3")};
    CHECK(verify_qbinomial_numeric(n, kTol).pass);
  }
  SUBCASE("a = 0 is Euler's series") {
    auto p = qbinomial_canonical(20);
    p.a = QMonomial::scalar(0);
    auto lhs = qbinomial_sum_formal(p).sum;
    qpoch::FormalProduct e;
    e.div_poch_infinite(p.z);
    CHECK(equal_to_order(lhs, e.expand(p.ctx, 20), 20).equal);
    CHECK(verify_qbinomial_formal(p).pass);
  }
  SUBCASE("numeric") {
    QBinomialNumeric n{BigComplex(BigFloat("1.7"), BigFloat("-0.4")), BigComplex(BigFloat("0.5")), BigFloat("0.35")};
    CHECK(verify_qbinomial_numeric(n, kTol).pass);
    n.z = BigComplex(1L);
    CHECK_THROWS_AS(verify_qbinomial_numeric(n, kTol), RegionViolation);
  }
}

TEST_CASE("triple product") {
  auto p = triple_canonical(40);
  auto r = verify_triple_product_formal(p);
  CHECK(r.pass);

  // n = 1 term: -zeta q.
  auto lhs = triple_sum_formal(p).sum;
  CHECK(lhs.coefficient(1).coefficient(p.ctx->symbols.var("zeta")) == GaussianRational(-1));
  CHECK(lhs.coefficient(0).coefficient(Monomial{}) == GaussianRational(1));

  CHECK(verify_triple_product_formal(triple_canonical(30, 2)).pass);
  CHECK_THROWS_AS(triple_canonical(30, 0), RegionViolation);

  SUBCASE("theta(1) = 0") {
    auto s = triple_sum_numeric(BigComplex(1L), BigFloat("0.4"), kTol);
    CHECK(s.sum.value.abs() < kTol);
    CHECK(qpoch::theta(BigComplex(1L), BigFloat("0.4"), kTol).value.abs() < kTol);
  }
  SUBCASE("q = 1/3, z = -1") {
    const BigFloat tol("1e-30");
    auto n = verify_triple_product_numeric(BigComplex(-1L), BigFloat(mpq_class(1, 3)), tol);
    CHECK(n.pass);
    CHECK(residual(n) < tol);
  }
  SUBCASE("complex z") {
    CHECK(verify_triple_product_numeric(BigComplex(BigFloat("0.3"), BigFloat("2.1")), BigFloat("0.45"), kTol).pass);
  }
}

TEST_CASE("triple product as the b = 0, alpha -> 0 limit of 1psi1") {
  const int order = 30;
  auto ctx = FormalContext::make(SymbolTable{"alpha", "zeta"}, order);
  TripleFormal t{ctx, sym(ctx->symbols, "zeta", 1), order};
  auto from_psi = triple_from_1psi1(ctx, order);
  auto direct = triple_sum_formal(t).sum;
  auto cmp = equal_to_order(from_psi, direct, order);
  CHECK(cmp.equal);
  CHECK(equal_to_order(from_psi, qpoch::theta(ctx, t.z, order), order).equal);
}

TEST_CASE("q-beta integral") {
  const BigFloat tol("1e-30");
  SUBCASE("alpha = beta = 1, c = 1, q = 1/3") {
    QBetaNumeric p{BigFloat(1L), BigFloat(1L), BigComplex(1L), BigFloat(mpq_class(1, 3))};
    auto r = verify_qbeta_integral(p, tol, "unit");
    CHECK(r.pass);
    CHECK(residual(r) < tol);
    auto via = qbeta_via_1psi1(p, tol);
    auto side = qbeta_integral_side(p, tol);
    CHECK((via.value - side.value).abs() < tol);
  }
  SUBCASE("reflection case alpha = beta = 1/2") {
    QBetaNumeric p{BigFloat("0.5"), BigFloat("0.5"), BigComplex(1L), BigFloat("0.25")};
    auto r = verify_qbeta_integral(p, tol, "reflection");
    CHECK(r.pass);
    CHECK((qbeta_via_1psi1(p, tol).value - qbeta_product_side(p, tol).value).abs() < tol);
  }
  SUBCASE("other parameters") {
    QBetaNumeric p{BigFloat(2L), BigFloat(3L), BigComplex(BigFloat("0.5")), BigFloat("0.2")};
    CHECK(verify_qbeta_integral(p, kTol, "generic").pass);
  }
  SUBCASE("region") {
    QBetaNumeric p{BigFloat(-1L), BigFloat(1L), BigComplex(1L), BigFloat("0.2")};
    CHECK_THROWS_AS(verify_qbeta_integral(p, kTol, "bad"), RegionViolation);
  }
}

TEST_CASE("Kronecker") {
  SUBCASE("constant term") {
    auto ctx = FormalContext::make(SymbolTable{"alpha", "beta"}, 10);
    auto [lhs, rhs] = kronecker_cleared(ctx, 10);
    const auto& s = ctx->symbols;
    LaurentPoly c0 = LaurentPoly(1) - LaurentPoly::term(1, s.var("alpha") * s.var("beta"));
    CHECK(lhs.coefficient(0) == c0);
    CHECK(rhs.coefficient(0) == c0);
  }
  SUBCASE("formal N = 25") {
    auto r = verify_kronecker_formal(25);
    CHECK(r.pass);
    CHECK(r.residual == "0");
  }
  SUBCASE("numeric") {
    KroneckerNumeric p{BigComplex(BigFloat("0.7")), BigComplex(BigFloat("0.5")), BigFloat("0.2")};
    auto r = verify_kronecker_numeric(p, kTol);
    CHECK(r.pass);
    CHECK(residual(r) < kTol);
    p.a = BigComplex(BigFloat("0.1"));
    CHECK_THROWS_AS(verify_kronecker_numeric(p, kTol), RegionViolation);
  }
}

TEST_CASE("Guo-Schlosser") {
  const BigFloat q("0.25");
  GuoSchlosserNumeric p{BigComplex(3L), BigComplex(BigFloat("0.05")), BigComplex(BigFloat("1.2")),
                        BigComplex(BigFloat("0.4")), q};
  SUBCASE("stated instance") {
    auto r = verify_guo_schlosser(p, kTol, "default");
    CHECK(r.pass);
    CHECK(residual(r) < kTol);
  }
  SUBCASE("c = 1 reduces to 1psi1") {
    auto r = guo_schlosser_c1_consistency(p, kTol);
    CHECK(r.pass);
    auto c1 = p;
    c1.c = BigComplex(1L);
    CHECK(verify_guo_schlosser(c1, kTol, "c=1").pass);
  }
  SUBCASE("small z approaches the product without 1/(1-z)") {
    const auto limit = guo_schlosser_product(p, kTol).value * (BigComplex(1L) - p.z);
    BigFloat last(1e9);
    for (const char* z : {"0.4", "0.2", "0.1", "0.05"}) {
      auto s = p;
      s.z = BigComplex(BigFloat(z));
      s.b = BigComplex(BigFloat("0.3")) * s.a * s.c * s.z;
      BigFloat d = (guo_schlosser_sum(s, kTol).sum.value - limit).abs();
      CHECK(d < last);
      last = d;
    }
  }
  SUBCASE("seeded samples") {
    for (const auto& s : guo_schlosser_samples(7, 4)) CHECK(verify_guo_schlosser(s, kTol, "sample").pass);
  }
  SUBCASE("region and near-zero factor") {
    auto bad = p;
    bad.b = BigComplex(2L);
    CHECK_THROWS_AS(verify_guo_schlosser(bad, kTol, "bad"), RegionViolation);
    // a z q = 1 at k = 1.
    GuoSchlosserNumeric pole{BigComplex(4L), BigComplex(BigFloat("0.1")), BigComplex(1L), BigComplex(BigFloat("0.5")),
                             BigFloat("0.5")};
    CHECK_THROWS_AS(verify_guo_schlosser(pole, kTol, "pole"), FactorNearZero);
  }
}
