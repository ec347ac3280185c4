#include "qpsi/ncalg/noncommutative.hpp"

#include <random>
#include <utility>

#include "qpsi/errors.hpp"

namespace qpsi::ncalg {

namespace {

constexpr long kMaxFactors = 100000;

BigFloat one() { return BigFloat(1L); }

// Rounding allowance for `steps` matrix products of size d at the working
// precision, relative to `scale`.
BigFloat rounding_margin(long steps, std::size_t d, const BigFloat& scale) {
  return BigFloat::epsilon() * BigFloat(8L * (steps + 1) * static_cast<long>(d)) * scale;
}

bool is_identity(const Matrix& m) { return m.is_scalar_multiple_of_identity() && m(0, 0) == BigComplex(1L); }

}  // namespace

Matrix ordered_prod(const std::function<Matrix(long)>& factor, long m, long n, std::size_t d,
                    Orientation orientation) {
  Matrix p = Matrix::identity(d);
  const bool asc = orientation == Orientation::Ascending;
  if (n >= m) {
    for (long i = m; i <= n; ++i) p = asc ? p * factor(i) : factor(i) * p;
  } else if (n < m - 1) {
    for (long i = m - 1; i >= n + 1; --i) {
      const Matrix inv = factor(i).inverse();
      p = asc ? p * inv : inv * p;
    }
  }
  return p;
}

Matrix ms_factor(const MsPairs& p, const Matrix& z, const BigFloat& q, long i) {
  if (p.a.size() != p.b.size()) throw InvalidArgument("MS symbol needs as many a as b parameters");
  const std::size_t d = z.dim();
  const BigComplex qi(pow(q, i - 1));
  Matrix f = z;
  for (std::size_t s = 0; s < p.a.size(); ++s) {
    f = f * (Matrix::identity(d) - qi * p.a[s]);
    f = f * (Matrix::identity(d) - qi * p.b[s]).inverse();
  }
  return f;
}

MsValue ms_symbol(const MsPairs& p, const Matrix& z, const BigFloat& q, std::optional<long> k, Orientation sign,
                  const BigFloat& tol) {
  const std::size_t d = z.dim();
  auto factor = [&](long i) { return ms_factor(p, z, q, i); };
  if (k) {
    MsValue out{ordered_prod(factor, 1, *k, d, sign), BigFloat(0L), *k >= 0 ? *k : -*k};
    out.error = rounding_margin(out.factors, d, out.value.norm());
    return out;
  }
  if (!is_identity(z)) throw NonConvergentProduct("the infinite MS symbol is only defined here for z = 1");
  if (!(abs(q) < one())) throw NonConvergentProduct("infinite MS symbol needs |q| < 1");
  const BigFloat target = tol.is_zero() ? BigFloat::epsilon() : tol;
  const BigFloat aq = abs(q);
  std::vector<BigFloat> gap, bnorm;
  for (std::size_t s = 0; s < p.a.size(); ++s) {
    gap.push_back((p.b[s] - p.a[s]).norm());
    bnorm.push_back(p.b[s].norm());
  }
  Matrix prod = Matrix::identity(d);
  BigFloat qk = one();
  for (long i = 1; i <= kMaxFactors; ++i) {
    const Matrix f = factor(i);
    prod = sign == Orientation::Ascending ? prod * f : f * prod;
    qk *= aq;
    // sum_{j>i} |F_j - 1| <= sum_s |b_s - a_s| |q|^i / ((1-|q|)(1-|b_s||q|^i)).
    BigFloat sigma(0L);
    bool bounded = true;
    for (std::size_t s = 0; s < gap.size() && bounded; ++s) {
      const BigFloat bq = bnorm[s] * qk;
      if (!(bq < one())) {
        bounded = false;
        break;
      }
      sigma += gap[s] * qk / ((one() - aq) * (one() - bq));
    }
    if (!bounded) continue;
    const BigFloat pn = prod.norm();
    const BigFloat tail = pn * (exp(sigma) - one());
    if (tail < target) return {prod, tail + rounding_margin(i, d, pn), i};
  }
  throw NonConvergentProduct("infinite MS symbol did not settle within the factor cap");
}

void check_noncommutative_region(const NoncommutativeParams& p) {
  if (p.a.dim() == 0 || p.a.dim() != p.z.dim()) throw InvalidArgument("a and z must be square of the same size");
  if (!(p.q > BigFloat(0L) && p.q < one())) throw NormConditionViolated("q must lie in (0, 1)");
  if (!(p.z.norm() < one())) throw NormConditionViolated("|z| >= 1 (" + p.z.norm().str(6) + ")");
  const Matrix c = p.a.inverse() * p.z.inverse();
  const BigFloat bc = (p.b * c).norm();
  if (!(bc < one())) throw NormConditionViolated("|b a^-1 z^-1| >= 1 (" + bc.str(6) + ")");
}

NoncommutativeSides noncommutative_sides(const NoncommutativeParams& p, const BigFloat& tol) {
  check_noncommutative_region(p);
  const std::size_t d = p.a.dim();
  const Matrix id = Matrix::identity(d);
  const BigComplex& b = p.b.value;
  const BigFloat& q = p.q;
  const BigFloat inner = tol / BigFloat(1000L);
  const Matrix ainv = p.a.inverse();
  const Matrix zinv = p.z.inverse();
  const Matrix c = ainv * zinv;
  const Matrix za = p.z * p.a;
  const BigFloat zn = p.z.norm(), zan = za.norm(), cn = c.norm(), ainvn = ainv.norm(), bn = b.abs();

  NoncommutativeSides out;
  out.lhs = id;
  BigFloat mass = id.norm();
  long steps = 0;

  // k >= 1: P_k = P_{k-1} z (1 - a q^{k-1}) / (1 - b q^{k-1}).
  {
    Matrix prod = id;
    BigFloat qk = one();  // q^{k-1}
    long k = 1;
    for (;; ++k) {
      if (k > kMaxFactors) throw NonConvergentTail("forward MS sum did not settle");
      prod = prod * (p.z * (id - BigComplex(qk) * p.a)) * (one() / (BigComplex(1L) - b * BigComplex(qk)));
      out.lhs += prod;
      const BigFloat pn = prod.norm();
      mass += pn;
      qk *= q;
      const BigFloat rho = (zn + qk * zan) / (one() - bn * qk);
      if (rho < one() && bn * qk < one()) {
        const BigFloat tail = pn * rho / (one() - rho);
        if (tail < inner) {
          out.lhs_error += tail;
          break;
        }
      }
    }
    out.highest_index = k;
    steps += k;
  }
  // k <= -1: P_{-(j+1)} = P_{-j} A_{-j}^{-1} with
  // A_{-j}^{-1} = (b - q^m)(1 - q^m a^{-1})^{-1} a^{-1} z^{-1}, m = j + 1.
  {
    Matrix prod = id;
    BigFloat qm = q;
    long j = 0;
    for (;; ++j) {
      if (j > kMaxFactors) throw NonConvergentTail("backward MS sum did not settle");
      const Matrix step = (b - BigComplex(qm)) * ((id - BigComplex(qm) * ainv).inverse() * c);
      prod = prod * step;
      out.lhs += prod;
      const BigFloat pn = prod.norm();
      mass += pn;
      qm *= q;
      const BigFloat x = qm * ainvn;
      if (x < one()) {
        const BigFloat rho = (bn + qm) * cn / (one() - x);
        if (rho < one()) {
          const BigFloat tail = pn * rho / (one() - rho);
          if (tail < inner) {
            out.lhs_error += tail;
            break;
          }
        }
      }
    }
    out.lowest_index = -(j + 1);
    steps += j + 1;
  }
  out.lhs_error += rounding_margin(steps, d, mass);

  const MsValue r1 = ms_symbol({{za}, {p.z}}, id, q, std::nullopt, Orientation::Descending, inner);
  const MsValue r2 = ms_symbol({{BigComplex(q) * c}, {BigComplex(q) * p.z * c}}, id, q, std::nullopt,
                               Orientation::Ascending, inner);
  const MsValue r3 = ms_symbol({{b * p.z * c, BigComplex(q) * id}, {b * c, b * id}}, id, q, std::nullopt,
                               Orientation::Descending, inner);
  out.rhs = r1.value * r2.value * r3.value;
  const BigFloat n1 = r1.value.norm(), n2 = r2.value.norm(), n3 = r3.value.norm();
  out.rhs_error = (n1 + r1.error) * (n2 + r2.error) * (n3 + r3.error) - n1 * n2 * n3 +
                  rounding_margin(2, d, n1 * n2 * n3);
  return out;
}

identities::ResidualReport verify_noncommutative_1psi1(const NoncommutativeParams& p, const BigFloat& tol,
                                                       std::string instance) {
  const NoncommutativeSides s = noncommutative_sides(p, tol);
  identities::ResidualReport r;
  r.identity = "noncommutative-1psi1";
  r.instance = std::move(instance);
  r.backend = identities::Backend::Numeric;
  r.parameters = {{"d", std::to_string(p.a.dim())},
                  {"q", identities::format_number(p.q)},
                  {"b", identities::format_number(p.b.value)},
                  {"a", p.a.str(8)},
                  {"z", p.z.str(8)}};
  const BigFloat residual = (s.lhs - s.rhs).norm();
  const BigFloat err = s.lhs_error + s.rhs_error;
  r.residual = identities::format_number(residual);
  r.certified_error = identities::format_number(err);
  r.tolerance = identities::format_number(tol);
  r.pass = residual < tol && err < tol;
  r.note = "Frobenius norm; summed k in [" + std::to_string(s.lowest_index) + ", " +
           std::to_string(s.highest_index) + "]";
  return r;
}

NoncommutativeParams noncommutative_sample(std::uint64_t seed, std::size_t d, const BigFloat& q,
                                           const BigComplex& b) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    return BigFloat(mpq_class(static_cast<long>(rng() % 20001) - 10000, 10000));
  };
  Matrix a(d), z(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      BigFloat re = draw(), im = draw();
      a(i, j) = BigComplex(re, im);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      BigFloat re = draw(), im = draw();
      z(i, j) = BigComplex(re * BigFloat::rational(3, 10), im * BigFloat::rational(3, 10));
    }
  }
  a += Matrix::scalar(d, BigComplex(3L));
  z += Matrix::scalar(d, BigComplex(BigFloat::rational(1, 5)));
  const BigFloat half = BigFloat::rational(1, 2);
  z *= BigComplex(half / z.norm());
  const BigFloat bc = (b * (a.inverse() * z.inverse())).norm();
  a *= BigComplex(bc / half);
  return {a, z, Central{b}, q};
}

}  // namespace qpsi::ncalg
