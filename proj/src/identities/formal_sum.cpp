#include "qpsi/identities/formal_sum.hpp"

#include <cstdlib>

#include "qpsi/errors.hpp"

namespace qpsi::identities {

namespace {

// Visit the points of the sup-norm shell of the given radius.
template <typename F>
void for_each_on_shell(std::size_t dim, long radius, F&& visit) {
  std::vector<long> p(dim, -radius);
  while (true) {
    bool on_shell = radius == 0;
    for (long c : p) on_shell = on_shell || std::labs(c) == radius;
    if (on_shell) visit(p);
    std::size_t i = 0;
    while (i < dim && p[i] == radius) p[i++] = -radius;
    if (i == dim) return;
    ++p[i];
  }
}

}  // namespace

FormalSum formal_lattice_sum(const algebra::ContextPtr& ctx, std::size_t dim,
                             const std::function<qpoch::FormalProduct(const std::vector<long>&)>& term, int order,
                             long max_radius) {
  std::vector<qpoch::FormalProduct> live;
  int quiet = 0;
  long radius = 0;
  for (;; ++radius) {
    if (radius > max_radius) {
      throw FormalDivergence("bilateral sum does not truncate: terms below q^" + std::to_string(order) +
                             " persist beyond radius " + std::to_string(max_radius));
    }
    bool contributes = false;
    for_each_on_shell(dim, radius, [&](const std::vector<long>& r) {
      qpoch::FormalProduct p;
      try {
        p = term(r);
      } catch (const ZeroDivisor&) {
        return;
      }
      auto v = p.valuation();
      if (!v || *v >= order) return;
      contributes = true;
      live.push_back(std::move(p));
    });
    quiet = contributes ? 0 : quiet + 1;
    if (radius > 0 && quiet >= 2) break;
    if (dim == 0) break;
  }
  FormalSum out{algebra::QLaurentSeries::zero(ctx, order), radius, live.size()};
  for (const auto& p : live) out.sum += p.expand(ctx, order);
  return out;
}

}  // namespace qpsi::identities
