#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qpsi::roots {

enum class Family { A, B, C, D };

using Vec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

int inner(const Vec& u, const Vec& v);

// Roots in ambient coordinates: R^{n+1} for A_n, R^n otherwise, so that
// e^(e_i - e_j) = x_i / x_j.
struct RootSystemData {
  Family family = Family::A;
  int rank = 0;
  int dim = 0;
  std::vector<Vec> roots;     // positive roots followed by their negatives
  std::vector<Vec> positive;
  std::vector<Vec> simple;
  IntMatrix gram;             // <alpha_i, alpha_j> on simple roots
  std::vector<Vec> coroot_basis;            // simple coroots 2 alpha/<alpha,alpha>
  std::vector<Vec> simple_coefficients;     // per positive root
  std::vector<int> height;                  // per positive root
  std::vector<int> coroot_height;           // <rho, alpha^vee>, per positive root
  std::vector<bool> is_long;                // orbit label, per root in `roots`
  bool simply_laced = true;

  std::string name() const;
  int coxeter_number() const;
  bool is_simple(const Vec& alpha) const;
  bool is_long_root(const Vec& alpha) const;
};

// A1..A4, B2, B3, C2, C3, D4; UnsupportedRootSystem otherwise.
RootSystemData build_root_system(Family family, int rank);
// Parses "A2", "B3", ...
RootSystemData build_root_system(const std::string& name);

// Elements act on ambient coordinates; generated from the simple
// reflections by breadth-first search. Element 0 is the identity.
struct WeylGroupData {
  std::vector<IntMatrix> elements;
  std::size_t order() const { return elements.size(); }
};

WeylGroupData weyl_group(const RootSystemData& r);
Vec apply(const IntMatrix& w, const Vec& v);

// Classical |W|, |R+|, Coxeter number and degrees for the family and rank.
long classical_weyl_order(Family family, int rank);
std::vector<int> classical_degrees(Family family, int rank);

// Exponents (e_long, e_short) of t_long, t_short in
// prod_{beta > 0} t_beta^{<beta,alpha>/|alpha|^2}.
std::pair<int, int> t_height_exponents(const RootSystemData& r, const Vec& alpha);

}  // namespace qpsi::roots
