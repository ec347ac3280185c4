#include <random>

#include "doctest.h"
#include "qpsi/algebra/q_series.hpp"
#include "qpsi/errors.hpp"

using namespace qpsi;
using namespace qpsi::algebra;

namespace {

ContextPtr ctx_ab(int order = 20) { return FormalContext::make(SymbolTable{"alpha", "beta"}, order); }

QLaurentSeries poly(const ContextPtr& ctx, std::vector<std::pair<int, LaurentPoly>> terms, int order) {
  return QLaurentSeries::polynomial(ctx, terms, order);
}

LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nsym) {
  std::uniform_int_distribution<int> e(-2, 2), c(-5, 5), n(0, 4);
  LaurentPoly p;
  int terms = n(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < nsym; ++i) m.set(i, e(rng));
    p += LaurentPoly::term(GaussianRational(mpq_class(c(rng), 1 + n(rng)), mpq_class(c(rng))), m);
  }
  return p;
}

QLaurentSeries random_series(std::mt19937_64& rng, const ContextPtr& ctx, int order) {
  std::uniform_int_distribution<int> lo(-2, 1);
  int floor = lo(rng);
  QLaurentSeries s(ctx, floor, order);
  for (int k = floor; k < order; ++k) s.mutable_coefficient(k) = random_poly(rng, ctx->symbols.size());
  return s;
}

}  // namespace

TEST_CASE("gaussian rationals stay reduced and exact") {
  GaussianRational a = GaussianRational::fraction(6, 4);
  CHECK(a.re() == mpq_class(3, 2));
  CHECK(a.re().get_den() == 2);
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(GaussianRational(0).inverse(), ZeroDivisor);
  CHECK(GaussianRational(mpq_class(1), mpq_class(1)).inverse() == GaussianRational(mpq_class(1, 2), mpq_class(-1, 2)));
}

TEST_CASE("symbol table") {
  SymbolTable t{"a", "b"};
  CHECK(t.index("b") == 1);
  CHECK_THROWS_AS(t.index("c"), SymbolMismatch);
  CHECK_THROWS(SymbolTable({"a", "a"}));
  CHECK(t.format(t.var("a") * t.var("b", -2)) == "a*b^-2");
}

TEST_CASE("series_add") {
  auto ctx = ctx_ab();
  auto s = poly(ctx, {{0, 1}, {1, 3}, {-1, 2}}, 10);
  SUBCASE("additive identity") { CHECK(equal_to_order(s + QLaurentSeries::zero(ctx, 10), s, 10).equal); }
  SUBCASE("additive inverse") { CHECK((s + (-s)).is_zero()); }
  SUBCASE("(1+q)+(q+q^2)") {
    auto r = poly(ctx, {{0, 1}, {1, 1}}, 3) + poly(ctx, {{1, 1}, {2, 1}}, 3);
    CHECK(r.order() == 3);
    CHECK(r.coefficient(0) == LaurentPoly(1));
    CHECK(r.coefficient(1) == LaurentPoly(2));
    CHECK(r.coefficient(2) == LaurentPoly(1));
  }
  SUBCASE("order is the minimum") {
    auto r = poly(ctx, {{0, 1}}, 5) + poly(ctx, {{0, 1}}, 8);
    CHECK(r.order() == 5);
  }
  SUBCASE("mismatched tables") {
    auto other = FormalContext::make(SymbolTable{"alpha"}, 20);
    CHECK_THROWS_AS(s + QLaurentSeries::one(other, 10), SymbolMismatch);
  }
}

TEST_CASE("series_mul") {
  auto ctx = ctx_ab();
  const int N = 12;
  auto s = poly(ctx, {{0, 2}, {3, LaurentPoly::term(1, ctx->symbols.var("alpha"))}}, N);
  CHECK(equal_to_order(s * QLaurentSeries::one(ctx, N), s, N).equal);

  QLaurentSeries geom(ctx, 0, N);
  for (int k = 0; k < N; ++k) geom.mutable_coefficient(k) = 1;
  auto prod = poly(ctx, {{0, 1}, {1, -1}}, N) * geom;
  CHECK(prod.order() == N);
  CHECK(equal_to_order(prod, QLaurentSeries::one(ctx, N), N).equal);

  const Monomial a = ctx->symbols.var("alpha"), b = ctx->symbols.var("beta");
  auto r = poly(ctx, {{0, 1}, {1, LaurentPoly::term(-1, a)}}, N) * poly(ctx, {{0, 1}, {1, LaurentPoly::term(-1, b)}}, N);
  CHECK(r.coefficient(0) == LaurentPoly(1));
  CHECK(r.coefficient(1) == LaurentPoly::term(-1, a) + LaurentPoly::term(-1, b));
  CHECK(r.coefficient(2) == LaurentPoly::term(1, a * b));
  CHECK(r.coefficient(3).is_zero());

  SUBCASE("floor violation") {
    auto tight = FormalContext::make_with_floor(SymbolTable{"alpha"}, -2);
    auto x = QLaurentSeries::from_qmonomial(tight, QMonomial::q_power(-2), 5);
    CHECK_THROWS_AS(x * x, FloorViolation);
  }
  SUBCASE("known order after a shift") {
    // x = q^2 + O(q^6), y = 1 + q + O(q^5): known to min(6 + 0, 5 + 2).
    auto x = poly(ctx, {{2, 1}}, 6);
    auto y = poly(ctx, {{0, 1}, {1, 1}}, 5);
    CHECK((x * y).order() == 6);
  }
}

TEST_CASE("series_invert") {
  auto ctx = ctx_ab();
  const int N = 10;
  CHECK(equal_to_order(QLaurentSeries::one(ctx, N).invert(), QLaurentSeries::one(ctx, N), N).equal);

  auto inv = poly(ctx, {{0, 1}, {1, -1}}, N).invert();
  for (int k = 0; k < N; ++k) CHECK(inv.coefficient(k) == LaurentPoly(1));

  const Monomial a = ctx->symbols.var("alpha");
  auto s = poly(ctx, {{1, LaurentPoly::term(1, a)}, {2, LaurentPoly::term(-1, a)}}, N);
  auto si = s.invert();
  CHECK(si.floor() == -1);
  CHECK(si.valuation() == -1);
  for (int k = -1; k < si.order(); ++k) CHECK(si.coefficient(k) == LaurentPoly::term(1, a.inverse()));
  CHECK(equal_to_order(s * si, QLaurentSeries::one(ctx, N), si.order()).equal);

  auto nonunit = poly(ctx, {{0, LaurentPoly(1) + LaurentPoly::term(1, a)}}, N);
  CHECK_THROWS_AS(nonunit.invert(), NonInvertibleLeadingCoefficient);
  CHECK_THROWS_AS(QLaurentSeries::zero(ctx, N).invert(), ZeroDivisor);
}

TEST_CASE("series_substitute") {
  auto ctx = ctx_ab();
  const Monomial a = ctx->symbols.var("alpha");
  const int N = 5;
  auto s1 = poly(ctx, {{0, 1}, {1, LaurentPoly::term(-1, a)}}, N);
  auto r1 = s1.substitute("alpha", QMonomial::scalar(1));
  CHECK(equal_to_order(r1, poly(ctx, {{0, 1}, {1, -1}}, N), N).equal);

  auto s2 = poly(ctx, {{0, 1}, {1, LaurentPoly::term(-1, a * a)}}, N);
  CHECK(equal_to_order(s2.substitute("alpha", QMonomial::scalar(-1)), poly(ctx, {{0, 1}, {1, -1}}, N), N).equal);
  auto r3 = s2.substitute("alpha", QMonomial::scalar(GaussianRational::i()));
  CHECK(equal_to_order(r3, poly(ctx, {{0, 1}, {1, 1}}, N), N).equal);
  CHECK(r3.is_real());

  SUBCASE("q-power moves coefficients") {
    auto r = s1.substitute("alpha", QMonomial::q_power(2));
    CHECK(r.coefficient(3) == LaurentPoly(-1));
    CHECK(r.coefficient(1).is_zero());
  }
  SUBCASE("negative q-power hitting the floor") {
    auto tight = FormalContext::make_with_floor(SymbolTable{"alpha"}, 0);
    auto s = poly(tight, {{0, 1}, {1, LaurentPoly::term(-1, tight->symbols.var("alpha"))}}, N);
    CHECK_THROWS_AS(s.substitute("alpha", QMonomial::q_power(-2)), FloorViolation);
  }
  SUBCASE("unknown symbol") { CHECK_THROWS_AS(s1.substitute("gamma", QMonomial::scalar(1)), SymbolMismatch); }
}

TEST_CASE("series_equal_to_order") {
  auto ctx = ctx_ab();
  const int N = 6;
  auto s = poly(ctx, {{0, 3}, {2, 1}}, N + 1);
  CHECK(equal_to_order(s, s, N).equal);
  auto one = QLaurentSeries::one(ctx, N + 1);
  CHECK(equal_to_order(one, poly(ctx, {{0, 1}, {N, 1}}, N + 1), N).equal);
  auto cmp = equal_to_order(QLaurentSeries::one(ctx, 3), poly(ctx, {{0, 1}, {1, 1}}, 3), 2);
  CHECK_FALSE(cmp.equal);
  REQUIRE(cmp.first_difference.has_value());
  CHECK(*cmp.first_difference == 1);
}

TEST_CASE("ring axioms on random values") {
  std::mt19937_64 rng(20240611);
  auto ctx = FormalContext::make(SymbolTable{"x", "y", "z"}, 20);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly p = random_poly(rng, 3), r = random_poly(rng, 3), s = random_poly(rng, 3);
    CHECK(p * r == r * p);
    CHECK((p * r) * s == p * (r * s));
    CHECK(p * (r + s) == p * r + p * s);
    CHECK((p - p).is_zero());
  }
  for (int trial = 0; trial < 10; ++trial) {
    const int N = 6;
    auto a = random_series(rng, ctx, N), b = random_series(rng, ctx, N), c = random_series(rng, ctx, N);
    auto ab_c = (a * b) * c, a_bc = a * (b * c);
    int n = std::min(ab_c.order(), a_bc.order());
    CHECK(equal_to_order(ab_c, a_bc, n).equal);
    CHECK(equal_to_order(a * b, b * a, (a * b).order()).equal);
    auto lhs = a * (b + c), rhs = a * b + a * c;
    CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())).equal);
  }
}

TEST_CASE("invert round trip with monomial leading coefficient") {
  std::mt19937_64 rng(7);
  auto ctx = FormalContext::make(SymbolTable{"x", "y"}, 30);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_series(rng, ctx, 8);
    int v = s.valuation();
    if (v >= s.order()) continue;
    s.mutable_coefficient(v) = LaurentPoly::term(GaussianRational(mpq_class(trial + 1, 3)), ctx->symbols.var("x", trial % 3 - 1));
    auto prod = s * s.invert();
    CHECK(equal_to_order(prod, QLaurentSeries::one(ctx, prod.order()), prod.order()).equal);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(99);
  auto ctx = FormalContext::make(SymbolTable{"x", "y"}, 40);
  const QMonomial values[] = {QMonomial::scalar(-1), QMonomial::scalar(GaussianRational::i()),
                              QMonomial{GaussianRational(2), ctx->symbols.var("y"), 1}};
  for (const auto& v : values) {
    for (int trial = 0; trial < 5; ++trial) {
      auto a = random_series(rng, ctx, 6), b = random_series(rng, ctx, 6);
      auto lhs = (a * b).substitute("x", v);
      auto rhs = a.substitute("x", v) * b.substitute("x", v);
      int n = std::min(lhs.order(), rhs.order());
      CHECK(equal_to_order(lhs, rhs, n).equal);
      auto sl = (a + b).substitute("x", v), sr = a.substitute("x", v) + b.substitute("x", v);
      CHECK(equal_to_order(sl, sr, std::min(sl.order(), sr.order())).equal);
    }
  }
}

TEST_CASE("laurent division by a binomial") {
  SymbolTable t{"a", "b"};
  const Monomial ab = t.var("a") * t.var("b");
  LaurentPoly f = LaurentPoly(3) + LaurentPoly::term(2, t.var("a", 2)) - LaurentPoly::term(1, t.var("b", -1));
  LaurentPoly g = f * (LaurentPoly(1) - LaurentPoly::term(1, ab));
  CHECK(g.divide_by_binomial(1, ab) == f);
  CHECK_THROWS_AS(f.divide_by_binomial(1, ab), InexactDivision);
}
