// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpsi/algebra/q_series.hpp"
#include "qpsi/cli/output.hpp"
#include "qpsi/corpus/registry.hpp"
#include "qpsi/errors.hpp"
#include "qpsi/identities/single.hpp"
#include "qpsi/ncalg/noncommutative.hpp"
#include "qpsi/number_theory/squares.hpp"
#include "qpsi/roots/identities.hpp"

using namespace qpsi;
using identities::ResidualReport;
using numerics::BigComplex;
using numerics::BigFloat;

namespace {

// Pinned thresholds.
constexpr int kPrecisionBits = 256;
constexpr const char* kTripleTol = "1e-30";
constexpr const char* kQBetaTol = "1e-25";
constexpr const char* kRootTol = "1e-20";
constexpr const char* kGuoSchlosserTol = "1e-25";
constexpr const char* kMatrixTol = "1e-15";
constexpr double kFormal1psi1Seconds = 30.0;
constexpr double kNumberTheorySeconds = 60.0;
constexpr double kSuiteSeconds = 300.0;
constexpr std::uint64_t kSeed = 1;

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  void expect_report(const ResidualReport& r, const std::string& what) {
    expect(r.pass, what + " (residual " + r.residual + (r.note.empty() ? "" : ", " + r.note) + ")");
  }
  void expect_zero(const ResidualReport& r, const std::string& what) {
    expect(r.pass && r.residual == "0", what + " (residual " + r.residual + ")");
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << (total_ - failures_.size()) << "/" << total_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& f : failures_) os << "; FAILED " << f;
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << s << " s";
  return os.str();
}

BigComplex c(const char* s) { return BigComplex(BigFloat(s)); }

void formal_1psi1(Checks& k) {
  const auto t0 = std::chrono::steady_clock::now();
  k.expect_zero(identities::verify_1psi1_formal(identities::psi11_canonical(30)), "a=alpha, b=beta q^2, z=zeta q, N=30");
  const double s = seconds_since(t0);
  k.expect(s < kFormal1psi1Seconds, "runtime " + secs(s) + " under 30 s");
  k.note(secs(s));
}

void qbinomial(Checks& k) {
  k.expect_zero(identities::verify_qbinomial_formal(identities::qbinomial_canonical(30)), "formal N=30");
  for (int j = 0; j <= 2; ++j) {
    k.expect_zero(identities::verify_1psi1_formal(identities::psi11_ismail(j, 30)), "Ismail k=" + std::to_string(j));
  }
}

void triple(Checks& k) {
  k.expect_zero(identities::verify_triple_product_formal(identities::triple_canonical(40)), "formal N=40");
  const auto r = identities::verify_triple_product_numeric(c("-1"), BigFloat::rational(1, 3), BigFloat(kTripleTol));
  k.expect_report(r, "q=1/3, z=-1 below 1e-30");
  k.note("numeric residual " + r.residual);
}

void qbeta(Checks& k) {
  const BigFloat tol(kQBetaTol);
  struct Case {
    long an, ad, bn, bd, cn, cd, qd;
    const char* label;
  };
  const Case cases[] = {{1, 1, 1, 1, 1, 1, 3, "(1,1,1,1/3)"},
                        {1, 2, 1, 2, 1, 1, 4, "(1/2,1/2,1,1/4)"},
                        {2, 1, 3, 1, 1, 2, 5, "(2,3,1/2,1/5)"},
                        {1, 3, 2, 3, 1, 1, 3, "reflection (1/3,2/3,1,1/3)"}};
  BigFloat worst(0L);
  for (const auto& x : cases) {
    const identities::QBetaNumeric p{BigFloat::rational(x.an, x.ad), BigFloat::rational(x.bn, x.bd),
                                     BigComplex(BigFloat::rational(x.cn, x.cd)), BigFloat::rational(1, x.qd)};
    // Jackson sum and theta/q-gamma product are separate code paths.
    const auto integral = identities::qbeta_integral_side(p, tol);
    const auto product = identities::qbeta_product_side(p, tol);
    const BigFloat res = (integral.value - product.value).abs();
    k.expect(res < tol && integral.error + product.error < tol, std::string(x.label) + " residual " + res.str(6));
    k.expect_report(identities::verify_qbeta_integral(p, tol, x.label), x.label);
    worst = max(worst, res);
  }
  k.note("max residual " + worst.str(3));
}

void kronecker(Checks& k) {
  k.expect_zero(identities::verify_kronecker_formal(25), "cleared formal N=25");
  const auto four = number_theory::kronecker_limit_foursquare(50);
  k.expect_zero(four, "a=b=-1 against divisor rearrangement and theta power, N=50");
}

void number_theory_tables(Checks& k) {
  using namespace number_theory;
  const auto t0 = std::chrono::steady_clock::now();
  bool divisor = true, lagrange = true;
  for (long n = 1; n <= 1000; ++n) {
    divisor = divisor && rs_bruteforce(n, 2) == r2_divisor(n) && rs_bruteforce(n, 4) == r4_divisor(n);
    lagrange = lagrange && r4_divisor(n) > 0;
  }
  k.expect(divisor, "enumeration = divisor formula for s in {2,4}, n <= 1000");
  k.expect(lagrange, "r_4(n) > 0 for 1 <= n <= 1000");
  for (int s : {1, 2, 3, 4, 6}) {
    const auto table = rs_from_theta(s, 200);
    bool same = true;
    for (long n = 0; n <= 200; ++n) same = same && table.counts[static_cast<std::size_t>(n)] == rs_bruteforce(n, s);
    k.expect(same, "theta extraction = enumeration for s=" + std::to_string(s) + ", n <= 200");
  }
  const double s = seconds_since(t0);
  k.expect(s < kNumberTheorySeconds, "runtime " + secs(s) + " under 60 s");
  k.note(secs(s));
}

void poincare(Checks& k) {
  for (const char* name : {"A1", "A2", "A3", "B2"}) {
    const auto r = roots::build_root_system(name);
    for (bool distinct : {false, true}) {
      if (distinct && r.simply_laced) continue;
      const auto p = roots::verify_poincare(r, distinct);
      const std::string label = std::string(name) + (distinct ? " distinct t" : "");
      k.expect_zero(p.report, label);
      k.expect(p.weyl_order_at_t1 == p.weyl_order, label + ": t=1 gives |W| = " + std::to_string(p.weyl_order));
    }
  }
}

void coroot(Checks& k) {
  const BigFloat tol(kRootTol), q("0.2");
  const auto a1 = roots::build_root_system("A1");
  const auto a2 = roots::build_root_system("A2");
  k.expect_report(roots::verify_macdonald_coroot(a1, {q, c("0.3"), c("0.3"), {c("0.7"), c("1")}}, tol), "A1");
  k.expect_report(roots::verify_macdonald_coroot(a2, {q, c("0.3"), c("0.3"), {c("1.1"), c("0.7"), c("1.3")}}, tol),
                  "A2");
  k.expect_report(roots::macdonald_a1_against_1psi1(q, c("0.3"), c("0.7"), tol), "A1 against 1psi1 at (x/t, tx, t)");
}

void gustafson_milne(Checks& k) {
  auto p1 = roots::gustafson_milne_canonical(1, 20);
  bool termwise = true;
  for (long r = -10; r <= 10; ++r) {
    const auto u = roots::gustafson_milne_term(p1, {r}).expand(p1.ctx, 20);
    const auto v = identities::psi11_term(p1.a[0], p1.b[0], p1.z, r).expand(p1.ctx, 20);
    termwise = termwise && algebra::equal_to_order(u, v, 20).equal;
  }
  k.expect(termwise, "n=1 terms equal the 1psi1 terms, |r| <= 10");
  const auto prod1 = roots::gustafson_milne_product_cleared(p1).expand(p1.ctx, 20);
  const auto psi1 = identities::psi11_product(p1.a[0], p1.b[0], p1.z).expand(p1.ctx, 20);
  k.expect(algebra::equal_to_order(prod1, psi1, 20).equal, "n=1 product side equals the 1psi1 product");

  const BigFloat tol(kRootTol), q("0.2");
  k.expect_report(
      roots::verify_gustafson_milne({{c("2"), c("1.5")}, {c("0.05"), c("0.04")}, {c("1"), c("0.6")}, c("0.3"), q}, tol),
      "n=2 general");
  k.expect_report(
      roots::verify_gustafson_milne({{c("2"), c("1.5")}, {c("0.05"), c("0.05")}, {c("1"), c("0.6")}, c("0.3"), q}, tol),
      "n=2 b1=b2");
  const auto t0 = std::chrono::steady_clock::now();
  k.expect_zero(roots::verify_gustafson_milne_formal(roots::gustafson_milne_canonical(2, 15)), "n=2 formal N=15");
  k.note("formal n=2 " + secs(seconds_since(t0)));
}

void new_multiple(Checks& k) {
  auto p1 = roots::new_multiple_canonical(1, 20, 1);
  bool termwise = true;
  for (long r = -10; r <= 10; ++r) {
    const auto u = roots::new_multiple_term(p1, {r}).expand(p1.ctx, 20);
    const auto v = identities::psi11_term(p1.a, p1.b, p1.z, r).expand(p1.ctx, 20);
    termwise = termwise && algebra::equal_to_order(u, v, 20).equal;
  }
  k.expect(termwise, "n=1 terms equal the 1psi1 terms, |r| <= 10");
  const auto prod1 = roots::new_multiple_product_cleared(p1).expand(p1.ctx, 20);
  const auto psi1 = identities::psi11_product(p1.a, p1.b, p1.z).expand(p1.ctx, 20);
  k.expect(algebra::equal_to_order(prod1, psi1, 20).equal, "n=1 product side equals the 1psi1 product");

  const BigFloat tol(kRootTol), q("0.2");
  k.expect_report(
      roots::verify_new_multiple_1psi1({c("2"), c("0.05"), c("0.3"), c("0.4"), {c("1"), c("0.55")}, q}, tol),
      "n=2 numeric");
  const auto f = roots::verify_new_multiple_formal_scheme(2, 15);
  // Either outcome is acceptable as long as it is recorded.
  const bool recorded = f.residual == "0" && (f.instance == "t = tau" || f.note.find("FloorViolation") != std::string::npos);
  k.expect(f.pass && recorded, "n=2 formal N=15 (" + f.instance + ")");
  k.note("formal outcome: " + f.instance + (f.note.empty() ? "" : " after " + f.note));
}

void guo_schlosser(Checks& k) {
  const BigFloat tol(kGuoSchlosserTol);
  const auto samples = identities::guo_schlosser_samples(kSeed, 3);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    k.expect((s.b / (s.a * s.c)).abs() < s.z.abs() && s.z.abs() < BigFloat(1L),
             "sample " + std::to_string(i) + " inside |b/ac| < |z| < 1");
    k.expect_report(identities::verify_guo_schlosser(s, tol, "seeded"), "sample " + std::to_string(i));
  }
  const identities::GuoSchlosserNumeric c1{c("2"), c("0.1"), c("1"), c("0.4"), BigFloat("0.3")};
  k.expect_report(identities::verify_guo_schlosser(c1, tol, "c=1"), "c=1 instance");
  k.expect_report(identities::guo_schlosser_c1_consistency(c1, tol), "c=1 against the 1psi1");
  k.expect_report(identities::verify_1psi1_numeric({c1.a, c1.b, c1.z, c1.q}, tol), "1psi1 at the c=1 parameters");
}

void noncommutative(Checks& k) {
  using ncalg::Matrix;
  const BigFloat q("0.2"), tight("1e-25");
  const BigComplex b = c("0.05");

  const identities::Psi11Numeric scalar{c("2"), b, c("0.3"), q};
  const auto s1 = ncalg::noncommutative_sides({Matrix::scalar(1, scalar.a), Matrix::scalar(1, scalar.z), {b}, q}, tight);
  k.expect((s1.lhs(0, 0) - identities::psi11_sum_numeric(scalar, tight).sum.value).abs() < tight &&
               (s1.rhs(0, 0) - identities::psi11_product_numeric(scalar, tight).value).abs() < tight,
           "d=1 sides equal the classical sides");

  const std::vector<BigComplex> as{c("2"), c("1.5")}, zs{c("0.3"), c("0.4")};
  const auto s2 = ncalg::noncommutative_sides({Matrix::diagonal(as), Matrix::diagonal(zs), {b}, q}, tight);
  bool diag = s2.lhs(0, 1).abs() < tight && s2.lhs(1, 0).abs() < tight;
  for (std::size_t i = 0; i < 2; ++i) {
    const identities::Psi11Numeric e{as[i], b, zs[i], q};
    diag = diag && (s2.lhs(i, i) - identities::psi11_sum_numeric(e, tight).sum.value).abs() < tight &&
           (s2.rhs(i, i) - identities::psi11_product_numeric(e, tight).value).abs() < tight;
  }
  k.expect(diag, "d=2 diagonal entries equal the classical values");

  const BigFloat tol(kMatrixTol);
  BigFloat worst(0L);
  for (std::size_t d : {2u, 3u}) {
    for (std::uint64_t seed : {kSeed, kSeed + 1}) {
      const auto p = ncalg::noncommutative_sample(seed, d, q, b);
      const auto r = ncalg::verify_noncommutative_1psi1(p, tol);
      k.expect(((p.a * p.z) - (p.z * p.a)).norm() > BigFloat("1e-3"), "sample does not commute");
      k.expect_report(r, "d=" + std::to_string(d) + " seed " + std::to_string(seed));
      worst = max(worst, BigFloat(r.residual));
    }
  }
  k.note("max matrix residual " + worst.str(3));
}

void determinism(Checks& k) {
  corpus::RunConfig config;
  config.seed = kSeed;
  const auto names = corpus::identity_names();
  std::string first;
  for (int run = 0; run < 2; ++run) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = corpus::corpus_run(names, config);
    const double s = seconds_since(t0);
    const std::string json = cli::reports_to_json(reports);
    k.expect(corpus::all_pass(reports), "run " + std::to_string(run + 1) + " passes");
    k.expect(s < kSuiteSeconds, "run " + std::to_string(run + 1) + " took " + secs(s));
    k.note("run " + std::to_string(run + 1) + " " + secs(s) + ", " + std::to_string(reports.size()) + " reports");
    if (run == 0) {
      first = json;
    } else {
      k.expect(json == first, "byte-identical JSON");
    }
  }
}

}  // namespace

int main() {
  numerics::PrecisionScope scope(kPrecisionBits);
  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
      {"formal 1psi1 to order 30", formal_1psi1},
      {"q-binomial and Ismail specialisations", qbinomial},
      {"Jacobi triple product", triple},
      {"q-beta integral", qbeta},
      {"Kronecker identity and four-square limit", kronecker},
      {"sums of squares", number_theory_tables},
      {"Poincare polynomial identity", poincare},
      {"coroot-lattice identity", coroot},
      {"Gustafson-Milne", gustafson_milne},
      {"new multiple 1psi1", new_multiple},
      {"Guo-Schlosser", guo_schlosser},
      {"noncommutative 1psi1", noncommutative},
      {"determinism and suite time", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks k;
    try {
      criteria[i].second(k);
    } catch (const std::exception& e) {
      k.expect(false, std::string("exception: ") + e.what());
    }
    if (!k.ok()) ++failed;
    std::cout << "criterion " << std::setw(2) << (i + 1) << " " << (k.ok() ? "PASS" : "FAIL") << "  "
              << criteria[i].first << ": " << k.summary() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
