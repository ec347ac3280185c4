#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpsi/identities/report.hpp"

namespace qpsi::number_theory {

using Count = std::uint64_t;

// Ordered, signed integer tuples (x_1..x_s) with sum x_i^2 = n.
Count rs_bruteforce(long n, int s);

// 8 * sum of the divisors of n not divisible by 4; n >= 1.
Count r4_divisor(long n);
// 4 (d_1(n) - d_3(n)); n >= 1.
Count r2_divisor(long n);

struct RepCountTable {
  int s = 0;
  long max_n = 0;
  std::vector<Count> counts;  // r_s(0..max_n), signs already unfolded
};

// r_s(n), n <= M, read off (sum (-1)^m q^{m^2})^s. The same power is also
// expanded as ((q)_inf/(-q)_inf)^s; ThetaProductMismatch if they differ.
RepCountTable rs_from_theta(int s, long max_n);

// Divisor formula for r_s(n) when one is known (s = 2, 4).
std::optional<Count> rs_formula(long n, int s);

// The Kronecker identity at a = b = -1, compared with the divisor
// rearrangement 1 + 8 sum (-q)^m sigma*(m) and with rs_from_theta(4, .).
identities::ResidualReport kronecker_limit_foursquare(int order);
// The same at a = -1, b = i against 4 (d_1 - d_3) and rs_from_theta(2, .).
identities::ResidualReport kronecker_limit_twosquare(int order);

}  // namespace qpsi::number_theory
