#pragma once

#include "dromedary/problem.hpp"
#include "dromedary/rational.hpp"

#include <optional>

namespace dromedary {

/// Pair of distance bounds. When `exact` is set, lower == exact == upper.
struct BoundsResult {
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
};

/// Piecewise-linear interpolant of (1 + 2/B)^x through the integer knots.
/// Defined for every rational x, including negative ones.
Rational p(int B, const Rational& x);

/// Inverse of p(B, .). Requires y > 0.
Rational p_inv(int B, const Rational& y);

// Upper bounds derived from the potential argument.

/// One-way bound p_inv(B, (2N - 2 - B)/B) + B + 1, for N >= B + 1.
Rational one_way_upper(int B, const Rational& N);
/// Round-trip bound p_inv(B, N/B) + B/2, for N >= B.
Rational round_trip_upper(int B, const Rational& N);
/// B = 2 round trip, fuel-transport bound on 4 <= N <= 8.
Rational b2_round_trip_jeep_upper(const Rational& N);

// Exact optima and bracketing bounds.

/// B = 1, one way: p_inv(1, 2N - 3) + 2, for N >= 2.
Rational b1_one_way_exact(const Rational& N);
/// B = 1, round trip: p_inv(1, N) + 1/2, for N >= 1.
Rational b1_round_trip_exact(const Rational& N);

/// Distance reached by the doubling construction for B = 2 round trips.
/// Both relay branches are evaluated where they apply; the larger wins.
Rational b2_round_trip_lower(const Rational& N);

/// B = 2 round trip. `upper` is the tightest known bound (the transport
/// bound on [4, 8], p_inv(2, N) elsewhere); `exact` is filled for
/// 2 <= N <= 8 and for powers of two. Requires N >= 2.
BoundsResult b2_round_trip_bounds(const Rational& N);

/// Original camel (B = 1, S = 1): upper bound for N >= 3.
Rational original_upper(const Rational& N);
/// Original camel with N = 2^k + f bananas, k >= 1 and 0 <= f <= 2.
Rational original_exact(long long k, const Rational& f);
/// Decomposes N = 2^k + f with 0 <= f <= 2 when possible (smallest k).
std::optional<std::pair<long long, Rational>> original_decompose(const Rational& N);

// Jeep problem with tank size F and N units of fuel.
Rational jeep_one_way(const Rational& F, const Rational& N);
Rational jeep_round_trip(const Rational& F, const Rational& N);

/// Largest k with 2^k <= N (N >= 1).
long long floor_log2(const Rational& N);

}  // namespace dromedary
