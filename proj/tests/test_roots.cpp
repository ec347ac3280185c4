#include <algorithm>

#include "doctest.h"
#include "qpsi/errors.hpp"
#include "qpsi/identities/single.hpp"
#include "qpsi/roots/identities.hpp"

using namespace qpsi;
using namespace qpsi::roots;
using algebra::GaussianRational;
using algebra::LaurentPoly;
using algebra::Monomial;
using numerics::BigComplex;
using numerics::BigFloat;

namespace {

const BigFloat kTol("1e-20");

BigFloat residual(const ResidualReport& r) { return BigFloat(r.residual); }

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// prod_i (1 + t + ... + t^{d_i - 1})
LaurentPoly from_degrees(const std::vector<int>& degrees, const Monomial& t) {
  LaurentPoly p(1);
  for (int d : degrees) {
    LaurentPoly f;
    for (int k = 0; k < d; ++k) f += LaurentPoly::term(1, t.pow(k));
    p *= f;
  }
  return p;
}

BigComplex c(const char* re) { return BigComplex(BigFloat(re)); }

}  // namespace

TEST_CASE("build_root_system") {
  auto a1 = build_root_system(Family::A, 1);
  CHECK(a1.positive.size() == 1);
  CHECK(a1.height == std::vector<int>{1});
  CHECK(weyl_group(a1).order() == 2);

  auto a2 = build_root_system("A2");
  CHECK(sorted(a2.height) == std::vector<int>{1, 1, 2});
  CHECK(weyl_group(a2).order() == 6);

  auto b2 = build_root_system(Family::B, 2);
  CHECK(sorted(b2.height) == std::vector<int>{1, 1, 2, 3});
  CHECK(weyl_group(b2).order() == 8);
  CHECK(!b2.simply_laced);
  int long_roots = 0;
  for (const auto& a : b2.positive) long_roots += b2.is_long_root(a) ? 1 : 0;
  CHECK(long_roots == 2);

  CHECK_THROWS_AS(build_root_system(Family::B, 4), UnsupportedRootSystem);
  CHECK_THROWS_AS(build_root_system("E8"), UnsupportedRootSystem);
  CHECK_THROWS_AS(build_root_system(Family::A, 5), UnsupportedRootSystem);
}

TEST_CASE("classical invariants of every supported system") {
  const std::vector<std::pair<Family, int>> all{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                                {Family::B, 2}, {Family::B, 3}, {Family::C, 2}, {Family::C, 3},
                                                {Family::D, 4}};
  for (auto [f, n] : all) {
    auto r = build_root_system(f, n);
    CAPTURE(r.name());
    const auto degrees = classical_degrees(f, n);
    const int h = *std::max_element(degrees.begin(), degrees.end());
    CHECK(r.coxeter_number() == h);
    CHECK(static_cast<int>(r.positive.size()) == n * h / 2);
    CHECK(static_cast<long>(weyl_group(r).order()) == classical_weyl_order(f, n));
    CHECK(r.roots.size() == 2 * r.positive.size());
    for (std::size_t i = 0; i < r.positive.size(); ++i) {
      int sum = 0;
      for (int x : r.simple_coefficients[i]) sum += x;
      CHECK(sum == r.height[i]);
      if (r.simply_laced) CHECK(r.coroot_height[i] == r.height[i]);
    }
    // Roots are permuted by W.
    auto w = weyl_group(r);
    for (const auto& g : w.elements) {
      for (const auto& a : r.roots) {
        REQUIRE(std::find(r.roots.begin(), r.roots.end(), apply(g, a)) != r.roots.end());
      }
    }
  }
}

TEST_CASE("Poincare identity") {
  SUBCASE("A1") {
    auto res = verify_poincare(build_root_system(Family::A, 1), false);
    CHECK(res.report.pass);
    const Monomial t = res.symbols.var("t");
    CHECK(res.polynomial == LaurentPoly(1) + LaurentPoly::term(1, t));
    CHECK(res.weyl_order_at_t1 == 2);
  }
  SUBCASE("A2") {
    auto res = verify_poincare(build_root_system(Family::A, 2), false);
    CHECK(res.report.pass);
    const Monomial t = res.symbols.var("t");
    CHECK(res.polynomial == from_degrees({2, 3}, t));
    CHECK(res.weyl_order_at_t1 == 6);
  }
  SUBCASE("B2 equal t") {
    auto b2 = build_root_system(Family::B, 2);
    auto res = verify_poincare(b2, false);
    CHECK(res.report.pass);
    const Monomial t = res.symbols.var("t");
    CHECK(res.polynomial == from_degrees({2, 4}, t));
    CHECK(res.polynomial == length_generating_function(b2, res.symbols));
    CHECK(res.weyl_order_at_t1 == 8);
  }
  SUBCASE("B2 distinct t") {
    auto res = verify_poincare(build_root_system(Family::B, 2), true);
    CHECK(res.report.pass);
    CHECK(res.weyl_order_at_t1 == 8);
    CHECK_THROWS_AS(verify_poincare(build_root_system(Family::A, 2), true), RegionViolation);
  }
  SUBCASE("degree table") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::C, 2}, {Family::B, 3}}) {
      auto r = build_root_system(f, n);
      CAPTURE(r.name());
      auto res = verify_poincare(r, false);
      CHECK(res.report.pass);
      CHECK(res.polynomial == from_degrees(classical_degrees(f, n), res.symbols.var("t")));
      CHECK(res.weyl_order_at_t1 == classical_weyl_order(f, n));
    }
  }
}

TEST_CASE("coroot-lattice identity") {
  const BigFloat q("0.2");
  SUBCASE("gamma = 0 term") {
    auto a2 = build_root_system(Family::A, 2);
    CorootParams p{q, c("0.3"), c("0.3"), {c("1.1"), c("0.7"), c("1.3")}};
    // A single shell stops nowhere, so check the anchor through a tiny tolerance budget instead.
    auto s = macdonald_coroot_sum(a2, p, BigFloat("1e5"), 3);
    CHECK(s.radius >= 2);
    auto a1 = build_root_system(Family::A, 1);
    CorootParams p1{q, c("0.3"), c("0.3"), {c("0.7"), c("1")}};
    CHECK(macdonald_coroot_sum(a1, p1, BigFloat("1e5"), 3).points >= 1);
  }
  SUBCASE("A1 at q = 0.2, t = 0.3, x = 0.7") {
    auto a1 = build_root_system(Family::A, 1);
    CorootParams p{q, c("0.3"), c("0.3"), {c("0.7"), c("1")}};
    auto r = verify_macdonald_coroot(a1, p, kTol);
    CHECK(r.pass);
    CHECK(residual(r) < kTol);
    auto m = macdonald_a1_against_1psi1(q, c("0.3"), c("0.7"), kTol);
    CHECK(m.pass);
  }
  SUBCASE("A2 at q = 0.2, t = 0.3") {
    auto a2 = build_root_system(Family::A, 2);
    CorootParams p{q, c("0.3"), c("0.3"), {c("1.1"), c("0.7"), c("1.3")}};
    auto r = verify_macdonald_coroot(a2, p, kTol);
    CHECK(r.pass);
    CHECK(residual(r) < kTol);
  }
  SUBCASE("A2 at q = 0.15, t = 0.25") {
    auto a2 = build_root_system(Family::A, 2);
    CorootParams p{BigFloat("0.15"), c("0.25"), c("0.25"), {c("0.9"), c("1.2"), c("0.65")}};
    CHECK(verify_macdonald_coroot(a2, p, kTol).pass);
  }
  SUBCASE("B2 with distinct t") {
    auto b2 = build_root_system(Family::B, 2);
    CorootParams p{q, c("0.3"), c("0.45"), {c("0.7"), c("1.3")}};
    CHECK(verify_macdonald_coroot(b2, p, BigFloat("1e-15")).pass);
  }
  SUBCASE("region") {
    auto a1 = build_root_system(Family::A, 1);
    CorootParams p{q, c("1.3"), c("1.3"), {c("0.7"), c("1")}};
    CHECK_THROWS_AS(verify_macdonald_coroot(a1, p, kTol), RegionViolation);
  }
}

TEST_CASE("Gustafson-Milne") {
  const BigFloat q("0.2");
  SUBCASE("n = 1 is the 1psi1 termwise") {
    auto p = gustafson_milne_canonical(1, 20);
    const identities::Psi11Formal psi{p.ctx, p.a[0], p.b[0], p.z, 20};
    for (long r = -8; r <= 8; ++r) {
      CAPTURE(r);
      auto gm = gustafson_milne_term(p, {r});
      auto ps = identities::psi11_term(psi.a, psi.b, psi.z, r);
      CHECK(algebra::equal_to_order(gm.expand(p.ctx, 20), ps.expand(p.ctx, 20), 20).equal);
    }
    auto lhs = gustafson_milne_product_cleared(p).expand(p.ctx, 20);
    auto rhs = identities::psi11_product(psi.a, psi.b, psi.z).expand(p.ctx, 20);
    CHECK(algebra::equal_to_order(lhs, rhs, 20).equal);
    CHECK(verify_gustafson_milne_formal(p).pass);
  }
  SUBCASE("n = 2 numeric, general b") {
    GustafsonMilneNumeric p{{c("2"), c("1.5")}, {c("0.05"), c("0.04")}, {c("1"), c("0.6")}, c("0.3"), q};
    auto r = verify_gustafson_milne(p, kTol);
    CHECK(r.pass);
    CHECK(residual(r) < kTol);
  }
  SUBCASE("n = 2 numeric, b1 = b2") {
    GustafsonMilneNumeric p{{c("2"), c("1.5")}, {c("0.05"), c("0.05")}, {c("1"), c("0.6")}, c("0.3"), q};
    CHECK(verify_gustafson_milne(p, kTol).pass);
  }
  SUBCASE("errors") {
    GustafsonMilneNumeric p{{c("2"), c("1.5")}, {c("0.05"), c("0.04")}, {c("1"), c("1")}, c("0.3"), q};
    CHECK_THROWS_AS(verify_gustafson_milne(p, kTol), CoincidentPoints);
    p.x = {c("1"), c("0.6")};
    p.z = c("1.2");
    CHECK_THROWS_AS(verify_gustafson_milne(p, kTol), RegionViolation);
  }
  SUBCASE("permutation symmetry") {
    GustafsonMilneNumeric p{{c("2"), c("1.5")}, {c("0.05"), c("0.04")}, {c("1"), c("0.6")}, c("0.3"), q};
    GustafsonMilneNumeric s{{p.a[1], p.a[0]}, {p.b[1], p.b[0]}, {p.x[1], p.x[0]}, p.z, q};
    auto u = gustafson_milne_sum(p, kTol), v = gustafson_milne_sum(s, kTol);
    CHECK((u.sum.value - v.sum.value).abs() < kTol);
  }
}

TEST_CASE("Gustafson-Milne formal n = 2") {
  auto p = gustafson_milne_canonical(2, 15);
  auto r = verify_gustafson_milne_formal(p);
  CHECK(r.pass);
  CHECK(r.residual == "0");

  // Swapping (alpha_1, beta_1, x_1) with (alpha_2, beta_2, x_2) leaves the sum unchanged.
  auto s = p;
  std::swap(s.a[0], s.a[1]);
  std::swap(s.b[0], s.b[1]);
  std::swap(s.x[0], s.x[1]);
  auto lhs = gustafson_milne_sum_formal(p).sum;
  auto swapped = gustafson_milne_sum_formal(s).sum;
  // The cleared factor (1 - x2/x1) becomes (1 - x1/x2) = -(x1/x2)(1 - x2/x1).
  const auto& t = p.ctx->symbols;
  auto unit = algebra::QLaurentSeries::from_qmonomial(
      p.ctx, QMonomial{GaussianRational(-1), t.var("x1") * t.var("x2", -1), 0}, 15);
  CHECK(algebra::equal_to_order(lhs * unit, swapped, 15).equal);
}

TEST_CASE("new multiple 1psi1") {
  const BigFloat q("0.2");
  SUBCASE("n = 1 is the 1psi1") {
    auto p = new_multiple_canonical(1, 20, 1);
    for (long r = -8; r <= 8; ++r) {
      auto u = new_multiple_term(p, {r});
      auto v = identities::psi11_term(p.a, p.b, p.z, r);
      CHECK(algebra::equal_to_order(u.expand(p.ctx, 20), v.expand(p.ctx, 20), 20).equal);
    }
    auto lhs = new_multiple_product_cleared(p).expand(p.ctx, 20);
    auto rhs = identities::psi11_product(p.a, p.b, p.z).expand(p.ctx, 20);
    CHECK(algebra::equal_to_order(lhs, rhs, 20).equal);

    NewMultipleNumeric n{c("2"), c("0.05"), c("0.3"), c("0.4"), {c("1")}, q};
    auto one = verify_new_multiple_1psi1(n, kTol);
    auto psi = identities::verify_1psi1_numeric({c("2"), c("0.05"), c("0.3"), q}, kTol);
    CHECK(one.pass);
    CHECK(psi.pass);
  }
  SUBCASE("n = 2 numeric") {
    NewMultipleNumeric n{c("2"), c("0.05"), c("0.3"), c("0.4"), {c("1"), c("0.55")}, q};
    auto r = verify_new_multiple_1psi1(n, kTol);
    CHECK(r.pass);
    CHECK(residual(r) < kTol);
    NewMultipleNumeric s = n;
    std::swap(s.x[0], s.x[1]);
    CHECK((new_multiple_sum(n, kTol).sum.value - new_multiple_sum(s, kTol).sum.value).abs() < kTol);
    n.t = c("1.5");
    CHECK_THROWS_AS(verify_new_multiple_1psi1(n, kTol), RegionViolation);
  }
}

TEST_CASE("new multiple 1psi1 formal n = 2") {
  CHECK_THROWS_AS(verify_new_multiple_formal(new_multiple_canonical(2, 15, 0), "t = tau"), FloorViolation);
  auto r = verify_new_multiple_formal_scheme(2, 15);
  CHECK(r.pass);
  CHECK(r.instance == "t = tau q");
  CHECK(r.note.find("FloorViolation") != std::string::npos);
}
