#include "qpsi/corpus/registry.hpp"

#include <cxxabi.h>

#include <chrono>
#include <cstdlib>
#include <typeinfo>

#include "qpsi/errors.hpp"
#include "qpsi/identities/single.hpp"
#include "qpsi/ncalg/noncommutative.hpp"
#include "qpsi/number_theory/squares.hpp"
#include "qpsi/roots/identities.hpp"

namespace qpsi::corpus {

namespace {

using identities::BigComplex;
using identities::BigFloat;
using Reports = std::vector<ResidualReport>;

BigFloat num(const char* s) { return BigFloat(s); }
BigComplex cnum(const char* s) { return BigComplex(BigFloat(s)); }
BigFloat tol(const RunConfig& c) { return BigFloat(c.tolerance); }

// Multi-index formal sums grow quickly; they are checked to order min(N, 15).
int multi_order(const RunConfig& c) { return std::min(c.order, 15); }

Reports psi11_formal(const RunConfig& c) { return {identities::verify_1psi1_formal(identities::psi11_canonical(c.order))}; }

Reports psi11_numeric(const RunConfig& c) {
  return {identities::verify_1psi1_numeric({cnum("2"), cnum("0.1"), cnum("0.4"), num("0.3")}, tol(c))};
}

Reports qbinomial_formal(const RunConfig& c) {
  Reports out{identities::verify_qbinomial_formal(identities::qbinomial_canonical(c.order))};
  for (int k = 0; k <= 2; ++k) {
    ResidualReport r = identities::verify_1psi1_formal(identities::psi11_ismail(k, c.order),
                                                       "Ismail k=" + std::to_string(k));
    r.identity = "q-binomial";
    out.push_back(std::move(r));
  }
  return out;
}

Reports qbinomial_numeric(const RunConfig& c) {
  const BigFloat q = num("0.3");
  return {identities::verify_qbinomial_numeric({cnum("2"), cnum("0.4"), q}, tol(c)),
          identities::verify_qbinomial_numeric({BigComplex(q), cnum("0.4"), q}, tol(c), "a=q"),
          identities::verify_qbinomial_numeric({cnum("0"), cnum("0.4"), q}, tol(c), "a=0")};
}

Reports triple_formal(const RunConfig& c) {
  return {identities::verify_triple_product_formal(identities::triple_canonical(c.order))};
}

Reports triple_numeric(const RunConfig& c) {
  const BigFloat third = BigFloat::rational(1, 3);
  return {identities::verify_triple_product_numeric(cnum("-1"), third, tol(c), "q=1/3, z=-1"),
          identities::verify_triple_product_numeric({num("0.3"), num("0.8")}, num("0.25"), tol(c), "complex z")};
}

Reports qbeta_numeric(const RunConfig& c) {
  auto r = [](long an, long ad, long bn, long bd, long cn, long cd, long qd) {
    return identities::QBetaNumeric{BigFloat::rational(an, ad), BigFloat::rational(bn, bd),
                                    BigComplex(BigFloat::rational(cn, cd)), BigFloat::rational(1, qd)};
  };
  return {identities::verify_qbeta_integral(r(1, 1, 1, 1, 1, 1, 3), tol(c), "alpha=1, beta=1, c=1, q=1/3"),
          identities::verify_qbeta_integral(r(1, 2, 1, 2, 1, 1, 4), tol(c), "alpha=1/2, beta=1/2, c=1, q=1/4"),
          identities::verify_qbeta_integral(r(2, 1, 3, 1, 1, 2, 5), tol(c), "alpha=2, beta=3, c=1/2, q=1/5")};
}

Reports reflection_numeric(const RunConfig& c) {
  Reports out;
  auto add = [&](long xn, long xd, long cn, long cd, long qd, const std::string& label) {
    identities::QBetaNumeric p{BigFloat::rational(xn, xd), BigFloat::rational(xd - xn, xd),
                               BigComplex(BigFloat::rational(cn, cd)), BigFloat::rational(1, qd)};
    ResidualReport r = identities::verify_qbeta_integral(p, tol(c), label);
    r.identity = "reflection";
    out.push_back(std::move(r));
  };
  add(1, 2, 1, 1, 4, "x=1/2, c=1, q=1/4");
  add(1, 3, 1, 1, 3, "x=1/3, c=1, q=1/3");
  add(1, 4, 2, 3, 5, "x=1/4, c=2/3, q=1/5");
  return out;
}

Reports kronecker_formal(const RunConfig& c) { return {identities::verify_kronecker_formal(c.order)}; }

Reports kronecker_numeric(const RunConfig& c) {
  return {identities::verify_kronecker_numeric({cnum("0.7"), cnum("0.5"), num("0.2")}, tol(c))};
}

Reports guo_schlosser_numeric(const RunConfig& c) {
  Reports out{identities::verify_guo_schlosser({cnum("3"), cnum("0.05"), cnum("1.2"), cnum("0.4"), num("0.25")},
                                               tol(c), "q=0.25, a=3, b=0.05, z=0.4, c=1.2")};
  const auto samples = identities::guo_schlosser_samples(c.seed, 3);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out.push_back(identities::verify_guo_schlosser(samples[i], tol(c),
                                                   "seed " + std::to_string(c.seed) + " #" + std::to_string(i)));
  }
  out.push_back(identities::guo_schlosser_c1_consistency(
      {cnum("2"), cnum("0.1"), cnum("1"), cnum("0.4"), num("0.3")}, tol(c)));
  return out;
}

Reports foursquare_formal(const RunConfig& c) { return {number_theory::kronecker_limit_foursquare(c.order)}; }
Reports twosquare_formal(const RunConfig& c) { return {number_theory::kronecker_limit_twosquare(c.order)}; }

Reports poincare_formal(const RunConfig&) {
  Reports out;
  for (const char* name : {"A1", "A2", "A3", "B2", "C2", "B3"}) {
    const auto r = roots::build_root_system(name);
    out.push_back(roots::verify_poincare(r, false).report);
    if (!r.simply_laced) out.push_back(roots::verify_poincare(r, true).report);
  }
  return out;
}

Reports coroot_numeric(const RunConfig& c) {
  const auto a1 = roots::build_root_system("A1");
  const auto a2 = roots::build_root_system("A2");
  const auto b2 = roots::build_root_system("B2");
  const BigFloat q = num("0.2");
  return {roots::verify_macdonald_coroot(a1, {q, cnum("0.3"), cnum("0.3"), {cnum("0.7"), cnum("1")}}, tol(c),
                                         "A1, q=0.2, t=0.3"),
          roots::macdonald_a1_against_1psi1(q, cnum("0.3"), cnum("0.7"), tol(c)),
          roots::verify_macdonald_coroot(a2, {q, cnum("0.3"), cnum("0.3"), {cnum("1.1"), cnum("0.7"), cnum("1.3")}},
                                         tol(c), "A2, q=0.2, t=0.3"),
          roots::verify_macdonald_coroot(
              a2, {num("0.15"), cnum("0.25"), cnum("0.25"), {cnum("0.9"), cnum("1.2"), cnum("0.65")}}, tol(c),
              "A2, q=0.15, t=0.25"),
          roots::verify_macdonald_coroot(b2, {q, cnum("0.3"), cnum("0.45"), {cnum("0.7"), cnum("1.3")}}, tol(c),
                                         "B2, q=0.2, t_long=0.3, t_short=0.45")};
}

Reports gustafson_milne_formal(const RunConfig& c) {
  return {roots::verify_gustafson_milne_formal(roots::gustafson_milne_canonical(2, multi_order(c)))};
}

Reports gustafson_milne_numeric(const RunConfig& c) {
  const BigFloat q = num("0.2");
  return {roots::verify_gustafson_milne({{cnum("2"), cnum("1.5")}, {cnum("0.05"), cnum("0.04")}, {cnum("1"), cnum("0.6")},
                                         cnum("0.3"), q},
                                        tol(c), "n=2 general"),
          roots::verify_gustafson_milne({{cnum("2"), cnum("1.5")}, {cnum("0.05"), cnum("0.05")}, {cnum("1"), cnum("0.6")},
                                         cnum("0.3"), q},
                                        tol(c), "n=2, b1=b2")};
}

Reports new_multiple_formal(const RunConfig& c) { return {roots::verify_new_multiple_formal_scheme(2, multi_order(c))}; }

Reports new_multiple_numeric(const RunConfig& c) {
  const BigFloat q = num("0.2");
  return {roots::verify_new_multiple_1psi1({cnum("2"), cnum("0.05"), cnum("0.3"), cnum("0.4"), {cnum("1")}, q}, tol(c),
                                           "n=1"),
          roots::verify_new_multiple_1psi1(
              {cnum("2"), cnum("0.05"), cnum("0.3"), cnum("0.4"), {cnum("1"), cnum("0.55")}, q}, tol(c), "n=2")};
}

Reports noncommutative_numeric(const RunConfig& c) {
  using ncalg::Matrix;
  const BigFloat q = num("0.2");
  const BigComplex b = cnum("0.05");
  Reports out;
  out.push_back(ncalg::verify_noncommutative_1psi1(
      {Matrix::scalar(1, cnum("2")), Matrix::scalar(1, cnum("0.3")), {b}, q}, tol(c), "d=1"));
  out.push_back(ncalg::verify_noncommutative_1psi1({Matrix::diagonal({cnum("2"), cnum("1.5")}),
                                                    Matrix::diagonal({cnum("0.3"), cnum("0.4")}), {b}, q},
                                                   tol(c), "d=2 diagonal"));
  for (std::size_t d : {2u, 3u}) {
    out.push_back(ncalg::verify_noncommutative_1psi1(ncalg::noncommutative_sample(c.seed, d, q, b), tol(c),
                                                     "d=" + std::to_string(d) + ", seed " + std::to_string(c.seed)));
  }
  return out;
}

std::vector<IdentityEntry> build_registry() {
  return {
      {"1psi1", "Ramanujan's 1psi1 summation", psi11_formal, psi11_numeric},
      {"q-binomial", "q-binomial theorem and the b = q^{k+1} specialisations", qbinomial_formal, qbinomial_numeric},
      {"triple-product", "Jacobi triple product", triple_formal, triple_numeric},
      {"q-beta-integral", "Jackson q-beta integral", nullptr, qbeta_numeric},
      {"reflection", "q-beta integral at (x, 1-x)", nullptr, reflection_numeric},
      {"kronecker", "Kronecker's double-sum identity, cleared of (1 - ab)", kronecker_formal, kronecker_numeric},
      {"guo-schlosser", "Guo-Schlosser bilateral sum", nullptr, guo_schlosser_numeric},
      {"four-square", "r_4 from the Kronecker identity at a = b = -1", foursquare_formal, nullptr},
      {"two-square", "r_2 from the Kronecker identity at a = -1, b = i", twosquare_formal, nullptr},
      {"poincare", "Macdonald's Poincare polynomial identity", poincare_formal, nullptr},
      {"macdonald-coroot", "coroot-lattice sum", nullptr, coroot_numeric},
      {"gustafson-milne", "Gustafson-Milne multiple 1psi1", gustafson_milne_formal, gustafson_milne_numeric},
      {"new-multiple-1psi1", "multiple 1psi1 with the t-deformed Vandermonde", new_multiple_formal,
       new_multiple_numeric},
      {"noncommutative-1psi1", "matrix-valued 1psi1", nullptr, noncommutative_numeric},
  };
}

std::string error_kind(const std::exception& e) {
  int status = 0;
  char* raw = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
  std::string n = status == 0 && raw ? raw : "error";
  std::free(raw);
  if (n.rfind("qpsi::", 0) == 0) n = n.substr(6);
  return n;
}

Reports run_guarded(const IdentityEntry& e, const std::function<Reports(const RunConfig&)>& f,
                    identities::Backend backend, const RunConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  Reports out;
  try {
    out = f(c);
  } catch (const Error& err) {
    ResidualReport r;
    r.identity = e.name;
    r.instance = "error";
    r.backend = backend;
    r.pass = false;
    r.note = error_kind(err) + ": " + err.what();
    out.push_back(std::move(r));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.wall_time = secs / static_cast<double>(out.size());
  return out;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.order < 1) throw InvalidArgument("order must be >= 1");
  if (c.precision < 64) throw InvalidArgument("precision must be >= 64 bits");
  BigFloat t;
  try {
    t = BigFloat(c.tolerance);
  } catch (const std::exception&) {
    throw InvalidArgument("tolerance is not a number: " + c.tolerance);
  }
  if (!t.is_finite() || !(t > BigFloat(0L))) throw InvalidArgument("tolerance must be positive");
}

const std::vector<IdentityEntry>& registry() {
  static const std::vector<IdentityEntry> r = build_registry();
  return r;
}

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.name);
  return out;
}

const IdentityEntry& find_identity(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw UnknownIdentity("unknown identity: " + name);
}

std::vector<ResidualReport> corpus_run(const std::vector<std::string>& names, const RunConfig& config) {
  validate(config);
  std::vector<const IdentityEntry*> selected;
  for (const auto& n : names) selected.push_back(&find_identity(n));
  numerics::PrecisionScope scope(config.precision);
  Reports out;
  const bool formal = config.backend != BackendSelection::Numeric;
  const bool numeric = config.backend != BackendSelection::Formal;
  for (const IdentityEntry* e : selected) {
    if (formal && e->formal) {
      for (auto& r : run_guarded(*e, e->formal, identities::Backend::Formal, config)) out.push_back(std::move(r));
    }
    if (numeric && e->numeric) {
      for (auto& r : run_guarded(*e, e->numeric, identities::Backend::Numeric, config)) out.push_back(std::move(r));
    }
  }
  return out;
}

bool all_pass(const std::vector<ResidualReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace qpsi::corpus
