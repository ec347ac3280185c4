#include "qpsi/roots/identities.hpp"

#include <set>

#include "qpsi/errors.hpp"
#include "qpsi/identities/single.hpp"
#include "qpsi/qpoch/numeric.hpp"

namespace qpsi::roots {

using algebra::FormalContext;
using algebra::GaussianRational;
using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::SymbolTable;
using qpoch::FormalProduct;

namespace {

const BigFloat& one() {
  static thread_local BigFloat v(1L);
  return v;
}

BigFloat inner_tol(const BigFloat& tol) { return tol * BigFloat("1e-12"); }

Estimate poch_inf(const BigComplex& x, const BigFloat& q, const BigFloat& tol) {
  return numerics::eval_poch_infinite(x, q, tol);
}

Estimate exact(const BigComplex& v) { return {v, BigFloat(0L)}; }

void add_param(ResidualReport& r, std::string name, std::string value) {
  r.parameters.emplace_back(std::move(name), std::move(value));
}

std::string join(const std::vector<BigComplex>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + identities::describe(v[i]);
  return s + ")";
}

Monomial ambient(const Vec& v) {
  Monomial m;
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, v[i]);
  return m;
}

void require_distinct(const std::vector<BigComplex>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) throw RegionViolation("x_i must be nonzero");
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) throw CoincidentPoints("x_" + std::to_string(i + 1) + " = x_" + std::to_string(j + 1));
    }
  }
}

void require_q(const BigFloat& q) {
  if (!(q.sign() > 0 && q < one())) throw RegionViolation("q must lie in (0, 1)");
}

long total(const std::vector<long>& r) {
  long s = 0;
  for (long v : r) s += v;
  return s;
}

std::vector<std::string> indexed(const char* stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

QMonomial symbol(const SymbolTable& s, const std::string& name, int qexp = 0) {
  return {GaussianRational(1), s.var(name), qexp};
}

QMonomial ratio(const QMonomial& u, const QMonomial& v) { return u * v.inverse(); }

}  // namespace

// ------------------------------------------------------------ Poincare

algebra::LaurentPoly length_generating_function(const RootSystemData& r, const SymbolTable& symbols) {
  const std::set<Vec> pos(r.positive.begin(), r.positive.end());
  const Monomial t = symbols.var("t");
  LaurentPoly out;
  for (const auto& w : weyl_group(r).elements) {
    int length = 0;
    for (const auto& a : r.positive) length += pos.count(apply(w, a)) ? 0 : 1;
    out += LaurentPoly::term(1, t.pow(length));
  }
  return out;
}

PoincareResult verify_poincare(const RootSystemData& r, bool distinct_t) {
  if (distinct_t && r.simply_laced) throw RegionViolation(r.name() + " is simply laced and takes a single t");
  std::vector<std::string> names = indexed("x", static_cast<std::size_t>(r.dim));
  if (distinct_t) {
    names.insert(names.end(), {"t_long", "t_short"});
  } else {
    names.push_back("t");
  }
  PoincareResult out;
  out.symbols = SymbolTable(names);
  const std::size_t t_long = static_cast<std::size_t>(r.dim);
  const std::size_t t_short = distinct_t ? t_long + 1 : t_long;
  auto t_of = [&](const Vec& a) { return Monomial::variable(r.is_long_root(a) ? t_long : t_short); };

  const std::set<Vec> pos(r.positive.begin(), r.positive.end());
  const auto weyl = weyl_group(r);
  out.weyl_order = static_cast<long>(weyl.order());

  // Every term over the common denominator prod_{beta>0} (1 - e^beta).
  LaurentPoly lhs;
  for (const auto& w : weyl.elements) {
    LaurentPoly term(1);
    for (const auto& a : r.positive) {
      const Vec wa = apply(w, a);
      term *= LaurentPoly(1) - LaurentPoly::term(1, t_of(a) * ambient(wa));
      if (!pos.count(wa)) {
        Vec beta = wa;
        for (auto& c : beta) c = -c;
        term *= LaurentPoly::term(-1, ambient(beta));
      }
    }
    lhs += term;
  }
  LaurentPoly delta(1);
  for (const auto& b : r.positive) delta *= LaurentPoly(1) - LaurentPoly::term(1, ambient(b));

  LaurentPoly numer(1);
  std::vector<Monomial> heights;
  for (std::size_t i = 0; i < r.positive.size(); ++i) {
    const auto& a = r.positive[i];
    auto [el, es] = t_height_exponents(r, a);
    if (!distinct_t && el + es != r.coroot_height[i]) throw Error("t-height disagrees with the coroot height");
    Monomial th = Monomial::variable(t_long, el) * Monomial::variable(t_short, es);
    numer *= LaurentPoly(1) - LaurentPoly::term(1, t_of(a) * th);
    heights.push_back(th);
  }

  ResidualReport& rep = out.report;
  rep.identity = "poincare";
  rep.instance = r.name() + (distinct_t ? " distinct t" : " equal t");
  rep.backend = identities::Backend::Formal;
  add_param(rep, "system", r.name());
  add_param(rep, "t", distinct_t ? "t_long, t_short" : "t");
  try {
    LaurentPoly p = numer;
    for (const auto& th : heights) p = p.divide_by_binomial(1, th);
    out.polynomial = p;
    const LaurentPoly diff = lhs - delta * p;
    rep.pass = diff.is_zero();
    rep.residual = rep.pass ? "0" : "nonzero (" + std::to_string(diff.size()) + " terms)";
  } catch (const InexactDivision&) {
    rep.pass = false;
    rep.residual = "product side is not a polynomial";
  }
  rep.certified_error = "0";
  rep.tolerance = "0";

  if (rep.pass) {
    auto at_one = [&](LaurentPoly x) {
      x = x.substitute(t_long, 1, Monomial{});
      if (distinct_t) x = x.substitute(t_short, 1, Monomial{});
      return x;
    };
    const LaurentPoly p1 = at_one(out.polynomial);
    const bool lhs_ok = at_one(lhs) == delta * LaurentPoly(GaussianRational(mpq_class(out.weyl_order)));
    const GaussianRational c = p1.coefficient(Monomial{});
    out.weyl_order_at_t1 = (lhs_ok && p1.is_constant() && c == GaussianRational(mpq_class(out.weyl_order)))
                               ? out.weyl_order
                               : -1;
    rep.note = "W(t) = " + out.polynomial.str(out.symbols);
  }
  return out;
}

// -------------------------------------------------- coroot-lattice sum

BigComplex exp_root(const CorootParams& p, const Vec& alpha) {
  BigComplex v(1L);
  for (std::size_t i = 0; i < alpha.size(); ++i) v *= numerics::pow(p.x[i], alpha[i]);
  return v;
}

namespace {

void check_coroot(const RootSystemData& r, const CorootParams& p) {
  require_q(p.q);
  if (p.x.size() != static_cast<std::size_t>(r.dim)) throw RegionViolation("x needs one value per ambient coordinate");
  for (const auto& x : p.x) {
    if (x.is_zero()) throw RegionViolation("x_i must be nonzero");
  }
  if (!(p.t_long.abs() < one() && p.t_short.abs() < one())) throw RegionViolation("coroot sum needs |t| < 1");
  if (r.simply_laced && !(p.t_long == p.t_short)) throw RegionViolation(r.name() + " is simply laced: t_long = t_short");
}

const BigComplex& t_for(const RootSystemData& r, const CorootParams& p, const Vec& a) {
  return r.is_long_root(a) ? p.t_long : p.t_short;
}

}  // namespace

numerics::LatticeSum macdonald_coroot_sum(const RootSystemData& r, const CorootParams& p, const BigFloat& tol,
                                          long max_radius) {
  check_coroot(r, p);
  std::vector<BigComplex> qe, tqe;
  for (const auto& a : r.roots) {
    qe.push_back(BigComplex(p.q) * exp_root(p, a));
    tqe.push_back(t_for(r, p, a) * qe.back());
  }
  auto term = [&](const std::vector<long>& k) {
    Vec gamma(static_cast<std::size_t>(r.dim), 0);
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (std::size_t c = 0; c < gamma.size(); ++c) gamma[c] += static_cast<int>(k[i]) * r.coroot_basis[i][c];
    }
    BigComplex v(1L);
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      const long n = inner(r.roots[i], gamma);
      if (n == 0) continue;
      v *= qpoch::poch_finite(qe[i], n, p.q) * qpoch::poch_finite_reciprocal(tqe[i], n, p.q);
    }
    return v;
  };
  return numerics::eval_lattice_shells(static_cast<std::size_t>(r.rank), term, tol, max_radius);
}

Estimate macdonald_coroot_product(const RootSystemData& r, const CorootParams& p, const BigFloat& tol) {
  check_coroot(r, p);
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q);
  Estimate out = exact(BigComplex(1L));
  for (const auto& a : r.positive) {
    auto [el, es] = t_height_exponents(r, a);
    const BigComplex th = numerics::pow(p.t_long, el) * numerics::pow(p.t_short, es);
    const BigComplex& ta = t_for(r, p, a);
    const BigComplex qchi = r.is_simple(a) ? q : BigComplex(1L);
    const BigComplex ea = exp_root(p, a);
    const BigComplex ena = BigComplex(1L) / ea;
    out = out * poch_inf(ta * th * q, p.q, t) * poch_inf(th * qchi / ta, p.q, t) /
                    (poch_inf(th * q, p.q, t) * poch_inf(th, p.q, t));
    out = out * poch_inf(q * ea, p.q, t) * poch_inf(q * ena, p.q, t) /
                    (poch_inf(ta * q * ea, p.q, t) * poch_inf(ta * q * ena, p.q, t));
  }
  return out;
}

ResidualReport verify_macdonald_coroot(const RootSystemData& r, const CorootParams& p, const BigFloat& tol,
                                       std::string instance) {
  auto lhs = macdonald_coroot_sum(r, p, tol);
  auto rhs = macdonald_coroot_product(r, p, tol);
  ResidualReport rep = identities::numeric_report("macdonald-coroot", std::move(instance), lhs.sum, rhs, tol);
  add_param(rep, "system", r.name());
  add_param(rep, "q", identities::describe(p.q));
  add_param(rep, "t_long", identities::describe(p.t_long));
  if (!r.simply_laced) add_param(rep, "t_short", identities::describe(p.t_short));
  add_param(rep, "x", join(p.x));
  add_param(rep, "radius", std::to_string(lhs.radius));
  return rep;
}

ResidualReport macdonald_a1_against_1psi1(const BigFloat& q, const BigComplex& t, const BigComplex& x,
                                          const BigFloat& tol) {
  const auto a1 = build_root_system(Family::A, 1);
  CorootParams p{q, t, t, {x, BigComplex(1L)}};
  auto lhs = macdonald_coroot_sum(a1, p, tol);
  identities::Psi11Numeric psi{x / t, t * x, t, q};
  const BigComplex norm = (BigComplex(1L) - t * x) / ((BigComplex(1L) + t) * (BigComplex(1L) - x));
  Estimate rhs = numerics::scale(identities::psi11_product_numeric(psi, tol), norm);
  ResidualReport rep = identities::numeric_report("macdonald-coroot", "A1 against 1psi1", lhs.sum, rhs, tol);
  add_param(rep, "system", "A1");
  add_param(rep, "q", identities::describe(q));
  add_param(rep, "t", identities::describe(t));
  add_param(rep, "x", identities::describe(x));
  return rep;
}

// ------------------------------------------------------ Gustafson-Milne

namespace {

void check_gm(const GustafsonMilneNumeric& p) {
  require_q(p.q);
  const std::size_t n = p.x.size();
  if (n == 0 || p.a.size() != n || p.b.size() != n) throw RegionViolation("a, b and x need the same length n >= 1");
  require_distinct(p.x);
  BigComplex a(1L), b(numerics::pow(BigComplex(p.q), 1 - static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    if (p.a[i].is_zero()) throw RegionViolation("a_i must be nonzero");
    a *= p.a[i];
    b *= p.b[i];
  }
  const BigFloat mz = p.z.abs();
  if (!(mz < one())) throw RegionViolation("Gustafson-Milne needs |z| < 1");
  if (!((b / a).abs() < mz)) throw RegionViolation("Gustafson-Milne needs |b/a| < |z|");
}

}  // namespace

numerics::LatticeSum gustafson_milne_sum(const GustafsonMilneNumeric& p, const BigFloat& tol, long max_radius) {
  check_gm(p);
  const std::size_t n = p.x.size();
  std::vector<std::vector<BigComplex>> ax(n, std::vector<BigComplex>(n)), bx = ax;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigComplex xij = p.x[i] / p.x[j];
      ax[i][j] = p.a[j] * xij;
      bx[i][j] = p.b[j] * xij;
    }
  }
  auto term = [&](const std::vector<long>& r) {
    BigComplex v = numerics::pow(p.z, total(r));
    for (std::size_t i = 0; i < n; ++i) {
      const BigComplex qi(pow(p.q, r[i]));
      for (std::size_t j = i + 1; j < n; ++j) {
        v *= (p.x[i] * qi - p.x[j] * BigComplex(pow(p.q, r[j]))) / (p.x[i] - p.x[j]);
      }
      for (std::size_t j = 0; j < n; ++j) {
        v *= qpoch::poch_finite(ax[i][j], r[i], p.q) * qpoch::poch_finite_reciprocal(bx[i][j], r[i], p.q);
      }
    }
    return v;
  };
  return numerics::eval_lattice_shells(n, term, tol, max_radius);
}

Estimate gustafson_milne_product(const GustafsonMilneNumeric& p, const BigFloat& tol) {
  check_gm(p);
  const std::size_t n = p.x.size();
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q);
  BigComplex a(1L), b(numerics::pow(q, 1 - static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    a *= p.a[i];
    b *= p.b[i];
  }
  const BigComplex az = a * p.z;
  Estimate out = poch_inf(az, p.q, t) * poch_inf(q / az, p.q, t) / (poch_inf(p.z, p.q, t) * poch_inf(b / az, p.q, t));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigComplex xij = p.x[i] / p.x[j];
      out = out * poch_inf(p.b[j] * xij / p.a[i], p.q, t) * poch_inf(q * xij, p.q, t) /
                      (poch_inf(q * xij / p.a[i], p.q, t) * poch_inf(p.b[j] * xij, p.q, t));
    }
  }
  return out;
}

ResidualReport verify_gustafson_milne(const GustafsonMilneNumeric& p, const BigFloat& tol, std::string instance) {
  auto lhs = gustafson_milne_sum(p, tol);
  ResidualReport rep =
      identities::numeric_report("gustafson-milne", std::move(instance), lhs.sum, gustafson_milne_product(p, tol), tol);
  add_param(rep, "n", std::to_string(p.x.size()));
  add_param(rep, "q", identities::describe(p.q));
  add_param(rep, "a", join(p.a));
  add_param(rep, "b", join(p.b));
  add_param(rep, "z", identities::describe(p.z));
  add_param(rep, "x", join(p.x));
  add_param(rep, "radius", std::to_string(lhs.radius));
  return rep;
}

GustafsonMilneFormal gustafson_milne_canonical(int n, int order) {
  if (n < 1) throw RegionViolation("n must be at least 1");
  const auto sn = static_cast<std::size_t>(n);
  std::vector<std::string> names = indexed("alpha", sn);
  for (auto& s : indexed("beta", sn)) names.push_back(s);
  names.push_back("zeta");
  for (auto& s : indexed("x", sn)) names.push_back(s);
  auto ctx = FormalContext::make(SymbolTable(names), order);
  const auto& s = ctx->symbols;
  GustafsonMilneFormal p{ctx, {}, {}, {}, symbol(s, "zeta", 1), order};
  for (std::size_t i = 1; i <= sn; ++i) {
    p.a.push_back(symbol(s, "alpha" + std::to_string(i)));
    p.b.push_back(symbol(s, "beta" + std::to_string(i), 2));
    p.x.push_back(symbol(s, "x" + std::to_string(i)));
  }
  return p;
}

FormalProduct gustafson_milne_term(const GustafsonMilneFormal& p, const std::vector<long>& r) {
  const std::size_t n = p.x.size();
  FormalProduct t(p.z.pow(static_cast<int>(total(r))));
  for (std::size_t i = 0; i < n; ++i) {
    const int ri = static_cast<int>(r[i]);
    // (x_i q^{r_i} - x_j q^{r_j}) / (x_i (1 - x_j/x_i)) without the cleared denominator.
    for (std::size_t j = i + 1; j < n; ++j) {
      t.mul_monomial(QMonomial::q_power(ri));
      t.mul_binomial(ratio(p.x[j], p.x[i]).times_q(static_cast<int>(r[j]) - ri));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const QMonomial xij = ratio(p.x[i], p.x[j]);
      t.mul_poch(p.a[j] * xij, ri);
      t.div_poch(p.b[j] * xij, ri);
    }
  }
  return t;
}

namespace {

QMonomial gm_total(const std::vector<QMonomial>& v, int qexp) {
  QMonomial m = QMonomial::q_power(qexp);
  for (const auto& x : v) m = m * x;
  return m;
}

}  // namespace

FormalProduct gustafson_milne_product_cleared(const GustafsonMilneFormal& p) {
  const std::size_t n = p.x.size();
  const QMonomial q = QMonomial::q_power(1);
  const QMonomial a = gm_total(p.a, 0), b = gm_total(p.b, 1 - static_cast<int>(n));
  const QMonomial az = a * p.z;
  FormalProduct out;
  out.mul_poch_infinite(az);
  out.mul_poch_infinite(ratio(q, az));
  out.div_poch_infinite(p.z);
  out.div_poch_infinite(ratio(b, az));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const QMonomial xij = ratio(p.x[i], p.x[j]);
      out.mul_poch_infinite(ratio(p.b[j] * xij, p.a[i]));
      out.mul_poch_infinite(q * xij);
      out.div_poch_infinite(ratio(q * xij, p.a[i]));
      out.div_poch_infinite(p.b[j] * xij);
    }
    for (std::size_t j = i + 1; j < n; ++j) out.mul_binomial(ratio(p.x[j], p.x[i]));
  }
  return out;
}

namespace {

void check_gm_scheme(const QMonomial& z, const QMonomial& b_over_az) {
  if (z.qexp < 1) throw RegionViolation("formal scheme needs z of positive q-order");
  if (b_over_az.qexp < 1) throw RegionViolation("formal scheme needs b/(az) of positive q-order");
}

}  // namespace

identities::FormalSum gustafson_milne_sum_formal(const GustafsonMilneFormal& p) {
  const int n = static_cast<int>(p.x.size());
  check_gm_scheme(p.z, ratio(gm_total(p.b, 1 - n), gm_total(p.a, 0) * p.z));
  return identities::formal_lattice_sum(
      p.ctx, p.x.size(), [&](const std::vector<long>& r) { return gustafson_milne_term(p, r); }, p.order,
      identities::default_radius_cap(p.order));
}

ResidualReport verify_gustafson_milne_formal(const GustafsonMilneFormal& p, std::string instance) {
  auto lhs = gustafson_milne_sum_formal(p);
  auto rhs = gustafson_milne_product_cleared(p).expand(p.ctx, p.order);
  ResidualReport rep = identities::formal_report("gustafson-milne", std::move(instance), lhs.sum, rhs, p.order);
  add_param(rep, "n", std::to_string(p.x.size()));
  add_param(rep, "scheme", "a_j = alpha_j, b_j = beta_j q^2, z = zeta q");
  add_param(rep, "radius", std::to_string(lhs.radius));
  return rep;
}

// ------------------------------------------------- new multiple 1psi1

namespace {

void check_new_multiple(const NewMultipleNumeric& p) {
  require_q(p.q);
  if (p.x.empty()) throw RegionViolation("x needs n >= 1 entries");
  require_distinct(p.x);
  if (p.a.is_zero() || p.t.is_zero()) throw RegionViolation("a and t must be nonzero");
  const BigFloat mz = p.z.abs();
  if (!(mz < one())) throw RegionViolation("new multiple 1psi1 needs |z| < 1");
  if (!((p.b / p.a).abs() < mz)) throw RegionViolation("new multiple 1psi1 needs |b/a| < |z|");
  if (!(p.t.abs() < one())) throw RegionViolation("new multiple 1psi1 needs |t| < 1");
}

}  // namespace

numerics::LatticeSum new_multiple_sum(const NewMultipleNumeric& p, const BigFloat& tol, long max_radius) {
  check_new_multiple(p);
  const std::size_t n = p.x.size();
  const BigComplex q(p.q);
  std::vector<std::vector<BigComplex>> lo(n, std::vector<BigComplex>(n)), hi = lo;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const BigComplex xij = p.x[i] / p.x[j];
      lo[i][j] = xij / p.t;
      hi[i][j] = p.t * q * xij;
    }
  }
  auto term = [&](const std::vector<long>& r) {
    const long m = total(r);
    BigComplex v = numerics::pow(p.z, m) * qpoch::poch_finite(p.a, m, p.q) * qpoch::poch_finite_reciprocal(p.b, m, p.q);
    for (std::size_t i = 0; i < n; ++i) {
      const BigComplex qi(pow(p.q, r[i]));
      for (std::size_t j = i + 1; j < n; ++j) {
        const long d = r[i] - r[j];
        v *= (p.x[i] * qi - p.x[j] * BigComplex(pow(p.q, r[j]))) / (p.x[i] - p.x[j]);
        v *= qpoch::poch_finite(lo[i][j], d, p.q) * qpoch::poch_finite_reciprocal(hi[i][j], d, p.q);
        v *= numerics::pow(p.t, d) * BigComplex(pow(p.q, -r[j]));
      }
    }
    return v;
  };
  return numerics::eval_lattice_shells(n, term, tol, max_radius);
}

Estimate new_multiple_product(const NewMultipleNumeric& p, const BigFloat& tol) {
  check_new_multiple(p);
  const std::size_t n = p.x.size();
  const BigFloat t = inner_tol(tol);
  const BigComplex q(p.q), az = p.a * p.z;
  Estimate out = poch_inf(az, p.q, t) * poch_inf(q / az, p.q, t) * poch_inf(p.b / p.a, p.q, t) *
                 poch_inf(p.t * q, p.q, t) /
                 (poch_inf(p.z, p.q, t) * poch_inf(p.b / az, p.q, t) * poch_inf(q / p.a, p.q, t) *
                  poch_inf(p.b, p.q, t));
  for (std::size_t i = 1; i < n; ++i) {
    out = out * poch_inf(numerics::pow(p.t, static_cast<long>(i) + 1) * q, p.q, t) /
          poch_inf(numerics::pow(p.t, static_cast<long>(i)), p.q, t);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigComplex xij = p.x[i] / p.x[j];
      out = out * poch_inf(q * xij, p.q, t) / poch_inf(p.t * q * xij, p.q, t);
    }
  }
  return out;
}

ResidualReport verify_new_multiple_1psi1(const NewMultipleNumeric& p, const BigFloat& tol, std::string instance) {
  auto lhs = new_multiple_sum(p, tol);
  ResidualReport rep =
      identities::numeric_report("new-multiple-1psi1", std::move(instance), lhs.sum, new_multiple_product(p, tol), tol);
  add_param(rep, "n", std::to_string(p.x.size()));
  add_param(rep, "q", identities::describe(p.q));
  add_param(rep, "t", identities::describe(p.t));
  add_param(rep, "a", identities::describe(p.a));
  add_param(rep, "b", identities::describe(p.b));
  add_param(rep, "z", identities::describe(p.z));
  add_param(rep, "x", join(p.x));
  add_param(rep, "radius", std::to_string(lhs.radius));
  return rep;
}

NewMultipleFormal new_multiple_canonical(int n, int order, int t_qexp) {
  if (n < 1) throw RegionViolation("n must be at least 1");
  std::vector<std::string> names{"alpha", "beta", "zeta", "tau"};
  for (auto& s : indexed("x", static_cast<std::size_t>(n))) names.push_back(s);
  auto ctx = FormalContext::make(SymbolTable(names), order);
  const auto& s = ctx->symbols;
  NewMultipleFormal p{ctx, symbol(s, "alpha"), symbol(s, "beta", 2), symbol(s, "zeta", 1), symbol(s, "tau", t_qexp),
                      {}, order};
  for (int i = 1; i <= n; ++i) p.x.push_back(symbol(s, "x" + std::to_string(i)));
  return p;
}

FormalProduct new_multiple_term(const NewMultipleFormal& p, const std::vector<long>& r) {
  const std::size_t n = p.x.size();
  const int m = static_cast<int>(total(r));
  FormalProduct t(p.z.pow(m));
  t.mul_poch(p.a, m);
  t.div_poch(p.b, m);
  const QMonomial q = QMonomial::q_power(1);
  for (std::size_t i = 0; i < n; ++i) {
    const int ri = static_cast<int>(r[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const int rj = static_cast<int>(r[j]);
      const int d = ri - rj;
      const QMonomial xij = ratio(p.x[i], p.x[j]);
      t.mul_monomial(QMonomial::q_power(ri));
      t.mul_binomial(ratio(p.x[j], p.x[i]).times_q(rj - ri));
      t.mul_poch(ratio(xij, p.t), d);
      t.div_poch(p.t * q * xij, d);
      t.mul_monomial(p.t.pow(d));
      t.mul_monomial(QMonomial::q_power(-rj));
    }
  }
  return t;
}

FormalProduct new_multiple_product_cleared(const NewMultipleFormal& p) {
  const std::size_t n = p.x.size();
  const QMonomial q = QMonomial::q_power(1);
  const QMonomial az = p.a * p.z;
  FormalProduct out;
  out.mul_poch_infinite(az);
  out.mul_poch_infinite(ratio(q, az));
  out.mul_poch_infinite(ratio(p.b, p.a));
  out.mul_poch_infinite(p.t * q);
  out.div_poch_infinite(p.z);
  out.div_poch_infinite(ratio(p.b, az));
  out.div_poch_infinite(ratio(q, p.a));
  out.div_poch_infinite(p.b);
  for (std::size_t i = 1; i < n; ++i) {
    out.mul_poch_infinite(p.t.pow(static_cast<int>(i) + 1) * q);
    out.div_poch_infinite(p.t.pow(static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const QMonomial xij = ratio(p.x[i], p.x[j]);
      out.mul_poch_infinite(q * xij);
      out.div_poch_infinite(p.t * q * xij);
    }
    for (std::size_t j = i + 1; j < n; ++j) out.mul_binomial(ratio(p.x[j], p.x[i]));
  }
  return out;
}

identities::FormalSum new_multiple_sum_formal(const NewMultipleFormal& p) {
  check_gm_scheme(p.z, ratio(p.b, p.a * p.z));
  return identities::formal_lattice_sum(
      p.ctx, p.x.size(), [&](const std::vector<long>& r) { return new_multiple_term(p, r); }, p.order,
      identities::default_radius_cap(p.order));
}

ResidualReport verify_new_multiple_formal(const NewMultipleFormal& p, std::string instance) {
  auto lhs = new_multiple_sum_formal(p);
  auto rhs = new_multiple_product_cleared(p).expand(p.ctx, p.order);
  ResidualReport rep = identities::formal_report("new-multiple-1psi1", std::move(instance), lhs.sum, rhs, p.order);
  add_param(rep, "n", std::to_string(p.x.size()));
  add_param(rep, "scheme", "a = alpha, b = beta q^2, z = zeta q, t = " + p.t.str(p.ctx->symbols));
  add_param(rep, "radius", std::to_string(lhs.radius));
  return rep;
}

ResidualReport verify_new_multiple_formal_scheme(int n, int order) {
  std::string first;
  try {
    return verify_new_multiple_formal(new_multiple_canonical(n, order, 0), "t = tau");
  } catch (const FloorViolation& e) {
    first = std::string("t = tau: FloorViolation (") + e.what() + ")";
  } catch (const NonInvertibleLeadingCoefficient& e) {
    first = std::string("t = tau: ") + e.what();
  }
  ResidualReport rep = verify_new_multiple_formal(new_multiple_canonical(n, order, 1), "t = tau q");
  rep.note = first + "; the scheme needs t = tau q";
  return rep;
}

}  // namespace qpsi::roots
