#include "qpsi/roots/root_system.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <set>

#include "qpsi/errors.hpp"

namespace qpsi::roots {

int inner(const Vec& u, const Vec& v) {
  int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

namespace {

Vec unit(int dim, int i, int c = 1) {
  Vec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

Vec combine(int dim, int i, int ci, int j, int cj) {
  Vec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] += ci;
  v[static_cast<std::size_t>(j)] += cj;
  return v;
}

Vec negate(Vec v) {
  for (auto& c : v) c = -c;
  return v;
}

bool supported(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1 && rank <= 4;
    case Family::B:
    case Family::C: return rank == 2 || rank == 3;
    case Family::D: return rank == 4;
  }
  return false;
}

// Coefficients of v in the simple roots, from the Gram system.
Vec simple_expansion(const RootSystemData& r, const Vec& v) {
  const std::size_t n = r.simple.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = r.gram[i][j];
    m[i][n] = inner(r.simple[i], v);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Vec out;
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class c = m[i][n] / m[i][i];
    if (c.get_den() != 1) throw Error("root is not an integral combination of simple roots");
    out.push_back(static_cast<int>(c.get_num().get_si()));
  }
  return out;
}

IntMatrix reflection(const Vec& alpha) {
  const int dim = static_cast<int>(alpha.size());
  const int n2 = inner(alpha, alpha);
  IntMatrix m(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const int num = 2 * alpha[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(j)];
      if (num % n2 != 0) throw Error("non-integral reflection");
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j ? 1 : 0) - num / n2;
    }
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

}  // namespace

std::string RootSystemData::name() const {
  static const char* letters = "ABCD";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

int RootSystemData::coxeter_number() const { return *std::max_element(height.begin(), height.end()) + 1; }

bool RootSystemData::is_simple(const Vec& alpha) const {
  return std::find(simple.begin(), simple.end(), alpha) != simple.end();
}

bool RootSystemData::is_long_root(const Vec& alpha) const {
  auto it = std::find(roots.begin(), roots.end(), alpha);
  if (it == roots.end()) throw Error("not a root");
  return is_long[static_cast<std::size_t>(it - roots.begin())];
}

RootSystemData build_root_system(Family family, int rank) {
  if (!supported(family, rank)) {
    static const char* letters = "ABCD";
    throw UnsupportedRootSystem(std::string("unsupported root system ") + letters[static_cast<int>(family)] +
                                std::to_string(rank));
  }
  RootSystemData r;
  r.family = family;
  r.rank = rank;
  r.dim = family == Family::A ? rank + 1 : rank;
  const int d = r.dim;

  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      r.positive.push_back(combine(d, i, 1, j, -1));
      if (family != Family::A) r.positive.push_back(combine(d, i, 1, j, 1));
    }
  }
  if (family == Family::B || family == Family::C) {
    for (int i = 0; i < d; ++i) r.positive.push_back(unit(d, i, family == Family::B ? 1 : 2));
  }
  for (int i = 0; i + 1 < d; ++i) r.simple.push_back(combine(d, i, 1, i + 1, -1));
  if (family == Family::B) r.simple.push_back(unit(d, d - 1));
  if (family == Family::C) r.simple.push_back(unit(d, d - 1, 2));
  if (family == Family::D) r.simple.push_back(combine(d, d - 2, 1, d - 1, 1));

  r.roots = r.positive;
  for (const auto& a : r.positive) r.roots.push_back(negate(a));
  int longest = 0;
  for (const auto& a : r.roots) longest = std::max(longest, inner(a, a));
  for (const auto& a : r.roots) {
    r.is_long.push_back(inner(a, a) == longest);
    if (inner(a, a) != longest) r.simply_laced = false;
  }

  for (const auto& a : r.simple) {
    Vec row;
    for (const auto& b : r.simple) row.push_back(inner(a, b));
    r.gram.push_back(row);
    Vec co = a;
    const int n2 = inner(a, a);
    for (auto& c : co) c = 2 * c / n2;
    r.coroot_basis.push_back(co);
  }

  for (const auto& a : r.positive) {
    Vec c = simple_expansion(r, a);
    int h = 0;
    for (int x : c) {
      if (x < 0) throw Error("positive root with a negative simple coefficient");
      h += x;
    }
    r.simple_coefficients.push_back(c);
    r.height.push_back(h);
    int two_rho = 0;
    for (const auto& b : r.positive) two_rho += inner(b, a);
    r.coroot_height.push_back(two_rho / inner(a, a));
  }
  return r;
}

RootSystemData build_root_system(const std::string& name) {
  if (name.size() < 2) throw UnsupportedRootSystem("unsupported root system " + name);
  const std::string letters = "ABCD";
  const auto f = letters.find(name[0]);
  if (f == std::string::npos) throw UnsupportedRootSystem("unsupported root system " + name);
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw UnsupportedRootSystem("unsupported root system " + name);
  }
  return build_root_system(static_cast<Family>(f), rank);
}

Vec apply(const IntMatrix& w, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += w[i][j] * v[j];
  }
  return out;
}

WeylGroupData weyl_group(const RootSystemData& r) {
  std::vector<IntMatrix> gens;
  for (const auto& a : r.simple) gens.push_back(reflection(a));
  IntMatrix id(static_cast<std::size_t>(r.dim), Vec(static_cast<std::size_t>(r.dim), 0));
  for (int i = 0; i < r.dim; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

  WeylGroupData w;
  std::set<IntMatrix> seen{id};
  std::deque<IntMatrix> queue{id};
  while (!queue.empty()) {
    IntMatrix g = queue.front();
    queue.pop_front();
    w.elements.push_back(g);
    for (const auto& s : gens) {
      IntMatrix h = multiply(s, g);
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return w;
}

long classical_weyl_order(Family family, int rank) {
  long fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= i;
  switch (family) {
    case Family::A: return fact * (rank + 1);
    case Family::B:
    case Family::C: return fact << rank;
    case Family::D: return fact << (rank - 1);
  }
  return 0;
}

std::vector<int> classical_degrees(Family family, int rank) {
  std::vector<int> d;
  switch (family) {
    case Family::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
  }
  return d;
}

std::pair<int, int> t_height_exponents(const RootSystemData& r, const Vec& alpha) {
  const int n2 = inner(alpha, alpha);
  int sum_long = 0, sum_short = 0;
  for (const auto& b : r.positive) (r.is_long_root(b) ? sum_long : sum_short) += inner(b, alpha);
  if (sum_long % n2 != 0 || sum_short % n2 != 0) throw Error("non-integral t-height exponent");
  return {sum_long / n2, sum_short / n2};
}

}  // namespace qpsi::roots
