#pragma once

#include <functional>
#include <vector>

#include "qpsi/qpoch/formal_product.hpp"

namespace qpsi::identities {

struct FormalSum {
  algebra::QLaurentSeries sum;
  long radius = 0;           // last sup-norm shell visited
  std::size_t expanded = 0;  // terms that reached the truncation window
};

// Sum over Z^dim of term(r), known through q^(order-1).
//
// Shells |r|_inf = 0, 1, ... are scanned by exact term valuation first;
// the scan ends after two consecutive shells in which no term has
// valuation below `order`, and only then are the surviving terms expanded.
// A ZeroDivisor raised while building a term marks a vanishing term.
// FormalDivergence if no such pair of shells occurs up to max_radius.
FormalSum formal_lattice_sum(const algebra::ContextPtr& ctx, std::size_t dim,
                             const std::function<qpoch::FormalProduct(const std::vector<long>&)>& term, int order,
                             long max_radius);

// Default radius cap for an order-N sum.
inline long default_radius_cap(int order) { return 4L * order + 8; }

}  // namespace qpsi::identities
