#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dromedary/closed_forms.hpp"

#include <random>

using namespace dromedary;

namespace {
Rational R(long long n, long long d = 1) { return rational(n, d); }
}  // namespace

TEST_CASE("p and its inverse at the documented points") {
  CHECK(p(1, 1) == 3);
  CHECK(p(2, R(3, 2)) == 3);
  CHECK(p(1, -1) == R(1, 3));
  CHECK(p(2, 0) == 1);
  CHECK(p(3, 2) == R(25, 9));
  CHECK(p_inv(1, 3) == 1);
  CHECK(p_inv(2, 6) == R(5, 2));
  CHECK(p_inv(1, R(1, 3)) == -1);
  CHECK_THROWS_AS(p_inv(1, 0), DomainError);
  CHECK_THROWS_AS(p_inv(1, -2), DomainError);
  CHECK_THROWS_AS(p(0, 1), DomainError);
}

TEST_CASE("p and p_inv are mutually inverse and increasing") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-400, 900), den(1, 36);
  for (int B = 1; B <= 4; ++B) {
    for (int i = 0; i < 400; ++i) {
      const Rational x = R(num(rng), den(rng));
      const Rational y = p(B, x);
      CHECK(y > 0);
      CHECK(p_inv(B, y) == x);
      const Rational x2 = x + R(1, den(rng));
      CHECK(p(B, x2) > y);
    }
    for (long long m = -3; m <= 6; ++m) CHECK(p(B, m) == pow(Rational(1) + R(2, B), m));
  }
}

TEST_CASE("p interpolates linearly between knots") {
  for (int B = 1; B <= 3; ++B)
    for (long long m = -2; m <= 4; ++m)
      for (long long t = 0; t <= 8; ++t) {
        const Rational w = R(t, 8);
        CHECK(p(B, m + w) == (1 - w) * p(B, m) + w * p(B, m + 1));
      }
}

TEST_CASE("potential upper bounds") {
  CHECK(one_way_upper(1, 2) == 2);
  CHECK(one_way_upper(1, 3) == 3);
  CHECK(one_way_upper(2, 4) == 4);
  CHECK_THROWS_AS(one_way_upper(2, R(5, 2)), DomainError);
  CHECK(round_trip_upper(1, 3) == R(3, 2));
  CHECK(round_trip_upper(2, 8) == 3);
  CHECK(round_trip_upper(1, 9) == R(5, 2));
  CHECK_THROWS_AS(round_trip_upper(2, 1), DomainError);
  // N/2 on B <= N <= B + 2
  for (int B = 1; B <= 4; ++B)
    for (long long t = 0; t <= 16; ++t) {
      const Rational N = B + R(2 * t, 16);
      CHECK(round_trip_upper(B, N) == N / 2);
    }
}

TEST_CASE("B = 2 transport bound") {
  CHECK(b2_round_trip_jeep_upper(5) == R(13, 6));
  CHECK(b2_round_trip_jeep_upper(6) == R(7, 3));
  CHECK(b2_round_trip_jeep_upper(8) == 3);
  CHECK(b2_round_trip_jeep_upper(4) == 2);
  CHECK_THROWS_AS(b2_round_trip_jeep_upper(R(39, 10)), DomainError);
  CHECK_THROWS_AS(b2_round_trip_jeep_upper(9), DomainError);
  for (Rational N = R(33, 8); N < 8; N += R(1, 8)) CHECK(b2_round_trip_jeep_upper(N) < p_inv(2, N));
}

TEST_CASE("B = 1 exact values") {
  CHECK(b1_one_way_exact(2) == 2);
  CHECK(b1_one_way_exact(5) == R(11, 3));
  CHECK(b1_one_way_exact(3) == 3);
  CHECK(b1_one_way_exact(6) == 4);
  CHECK_THROWS_AS(b1_one_way_exact(R(3, 2)), DomainError);
  CHECK(b1_round_trip_exact(1) == R(1, 2));
  CHECK(b1_round_trip_exact(3) == R(3, 2));
  CHECK(b1_round_trip_exact(9) == R(5, 2));
  CHECK_THROWS_AS(b1_round_trip_exact(R(1, 2)), DomainError);
  for (Rational N = 2; N <= 30; N += R(1, 8)) {
    CHECK(one_way_upper(1, N) == b1_one_way_exact(N));
    CHECK(round_trip_upper(1, N) == b1_round_trip_exact(N));
  }
  // tripling: 3n bananas reach one mile farther than n + 1
  for (long long n : {1, 2, 5, 14, 41}) CHECK(b1_one_way_exact(3 * n) == b1_one_way_exact(n + 1) + 1);
}

TEST_CASE("B = 2 round-trip bounds") {
  BoundsResult r = b2_round_trip_bounds(16);
  REQUIRE(r.exact);
  CHECK(*r.exact == 4);
  r = b2_round_trip_bounds(5);
  REQUIRE(r.exact);
  CHECK(*r.exact == R(13, 6));
  r = b2_round_trip_bounds(7);
  REQUIRE(r.exact);
  CHECK(*r.exact == R(8, 3));
  r = b2_round_trip_bounds(10);
  CHECK(r.lower == R(22, 7));
  CHECK(r.upper == R(13, 4));
  CHECK_FALSE(r.exact);
  for (long long k = 1; k <= 8; ++k) {
    const Rational N = pow(Rational(2), k);
    r = b2_round_trip_bounds(N);
    REQUIRE(r.exact);
    CHECK(*r.exact == k);
  }
  CHECK_THROWS_AS(b2_round_trip_bounds(R(3, 2)), DomainError);
}

TEST_CASE("B = 2 bounds invariants on a fine grid") {
  for (Rational N = 2; N <= 40; N += R(1, 8)) {
    const BoundsResult r = b2_round_trip_bounds(N);
    CHECK(r.lower <= r.upper);
    if (r.exact) {
      CHECK(r.lower == *r.exact);
      CHECK(r.upper == *r.exact);
    }
    CHECK(r.upper <= p_inv(2, N));
    CHECK(r.lower > p_inv(2, N) - 1 / (N - 1));
    if (N <= 4) CHECK(r.lower == N / 2);
    if (N >= 4 && N <= 6) CHECK(r.lower == (N - 4) / 6 + 2);
    if (N >= 6 && N <= 8) CHECK(r.lower == (N - 5) / 3 + 2);
  }
}

TEST_CASE("original camel") {
  CHECK(original_upper(4) == R(8, 3));
  CHECK(original_upper(3) == R(7, 3));
  CHECK(original_upper(10) == R(41, 12));
  CHECK_THROWS_AS(original_upper(R(5, 2)), DomainError);
  CHECK(original_exact(1, 1) == R(7, 3));
  CHECK(original_exact(1, 2) == R(8, 3));
  CHECK(original_exact(2, 0) == R(8, 3));
  CHECK(original_exact(2, 1) == R(17, 6));
  CHECK(original_exact(1, 0) == 2);
  CHECK(original_exact(3, 0) == R(13, 4));
  CHECK_THROWS_AS(original_exact(0, 1), DomainError);
  CHECK_THROWS_AS(original_exact(2, R(5, 2)), DomainError);
  // both decompositions describe N = 4 only when k = 1; for k >= 2 they are
  // different instances (2^k + 2 and 2^(k+1) bananas)
  CHECK(original_exact(1, 2) == original_exact(2, 0));
  for (long long k = 2; k <= 10; ++k) {
    CHECK(original_exact(k, 2) < original_exact(k + 1, 0));
    CHECK(original_exact(k, 2) == original_upper(pow(Rational(2), k) + 2));
    CHECK(original_exact(k + 1, 0) == original_upper(pow(Rational(2), k + 1)));
  }
  for (long long k = 2; k <= 8; ++k)
    for (long long t = 0; t <= 16; ++t) {
      const Rational f = R(t, 8);
      CHECK(original_exact(k, f) == original_upper(pow(Rational(2), k) + f));
    }
  auto split = original_decompose(R(11, 2));
  REQUIRE(split);
  CHECK(split->first == 2);
  CHECK(split->second == R(3, 2));
  CHECK_FALSE(original_decompose(R(3, 2)));
}

TEST_CASE("jeep formulas") {
  CHECK(jeep_one_way(1, 1) == 1);
  CHECK(jeep_one_way(1, 2) == R(4, 3));
  CHECK(jeep_one_way(4, 8) == R(16, 3));
  CHECK(jeep_round_trip(1, 1) == R(1, 2));
  CHECK(jeep_round_trip(1, 2) == R(3, 4));
  CHECK(jeep_round_trip(4, 4) == 2);
  CHECK_THROWS_AS(jeep_one_way(0, 1), DomainError);
  CHECK_THROWS_AS(jeep_round_trip(1, 0), DomainError);
  // the camel never outruns a jeep with tank B + 2
  for (Rational N = 3; N <= 20; N += R(1, 4)) {
    CHECK(b1_one_way_exact(N) <= jeep_one_way(3, N));
    CHECK(b1_round_trip_exact(N) <= jeep_round_trip(3, N));
    CHECK(b2_round_trip_bounds(N).lower <= jeep_round_trip(4, N));
  }
}

TEST_CASE("floor_log2") {
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(R(15, 2)) == 2);
  CHECK(floor_log2(8) == 3);
  CHECK_THROWS_AS(floor_log2(R(1, 2)), DomainError);
}
