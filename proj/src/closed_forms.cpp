#include "dromedary/closed_forms.hpp"

#include <algorithm>

namespace dromedary {

namespace {

Rational growth(int B) { return Rational(1) + rational(2, B); }

void require_B(int B) {
  if (B < 1) throw DomainError("back capacity B must be >= 1");
}

long long to_ll(const BigInt& v) { return static_cast<long long>(v); }

}  // namespace

long long floor_log2(const Rational& N) {
  if (N < 1) throw DomainError("floor_log2 requires N >= 1");
  long long k = 0;
  Rational power = 2;
  while (power <= N) {
    power *= 2;
    ++k;
  }
  return k;
}

Rational p(int B, const Rational& x) {
  require_B(B);
  BigInt knot = x.floor();
  Rational t = x - Rational(knot);
  return pow(growth(B), to_ll(knot)) * (Rational(1) + rational(2, B) * t);
}

Rational p_inv(int B, const Rational& y) {
  require_B(B);
  if (y <= 0) throw DomainError("p_inv requires y > 0");
  const Rational r = growth(B);
  // knot m with r^m <= y < r^(m+1)
  long long m = 0;
  Rational lo = 1;
  if (y >= 1) {
    while (lo * r <= y) {
      lo *= r;
      ++m;
    }
  } else {
    while (lo > y) {
      lo /= r;
      --m;
    }
  }
  return Rational(m) + (y / lo - 1) * rational(B, 2);
}

Rational one_way_upper(int B, const Rational& N) {
  require_B(B);
  if (N < B + 1) throw DomainError("one-way upper bound requires N >= B + 1");
  return p_inv(B, (2 * N - 2 - B) / B) + (B + 1);
}

Rational round_trip_upper(int B, const Rational& N) {
  require_B(B);
  if (N < B) throw DomainError("round-trip upper bound requires N >= B");
  return p_inv(B, N / B) + rational(B, 2);
}

Rational b2_round_trip_jeep_upper(const Rational& N) {
  if (N < 4 || N > 8) throw DomainError("B=2 transport bound requires 4 <= N <= 8");
  if (N <= 6) return (N - 4) / 6 + 2;
  return (N - 5) / 3 + 2;
}

Rational b1_one_way_exact(const Rational& N) {
  if (N < 2) throw DomainError("B=1 one-way exact value requires N >= 2");
  return p_inv(1, 2 * N - 3) + 2;
}

Rational b1_round_trip_exact(const Rational& N) {
  if (N < 1) throw DomainError("B=1 round-trip exact value requires N >= 1");
  return p_inv(1, N) + rational(1, 2);
}

Rational b2_round_trip_lower(const Rational& N) {
  if (N < 2) throw DomainError("B=2 round trip requires N >= 2");
  const long long k = floor_log2(N);
  const Rational n = pow(Rational(2), k - 1);
  std::optional<Rational> best;
  if (N >= 2 * n + 1) best = (N - 1 - 2 * n) / (2 * n - 1) + k;
  if (N <= 2 * n + 2) {
    Rational a = (N - 2 * n) / (4 * n - 2) + k;
    if (!best || a > *best) best = a;
  }
  return *best;
}

BoundsResult b2_round_trip_bounds(const Rational& N) {
  if (N < 2) throw DomainError("B=2 round-trip bounds require N >= 2");
  BoundsResult out;
  out.lower = b2_round_trip_lower(N);
  out.upper = p_inv(2, N);
  if (N >= 4 && N <= 8) out.upper = std::min(out.upper, b2_round_trip_jeep_upper(N));
  const bool power_of_two = N.is_integer() && pow(Rational(2), floor_log2(N)) == N;
  if (N <= 8 || power_of_two) out.exact = out.lower;
  return out;
}

Rational original_upper(const Rational& N) {
  if (N < 3) throw DomainError("original-problem upper bound requires N >= 3");
  return p_inv(2, rational(2, 3) * (N - 1)) / 2 + rational(13, 6);
}

Rational original_exact(long long k, const Rational& f) {
  if (k < 1) throw DomainError("original-problem exact value requires k >= 1");
  if (f < 0 || f > 2) throw DomainError("original-problem exact value requires 0 <= f <= 2");
  return rational(k, 2) + rational(11, 6) + (f - 1) / (3 * pow(Rational(2), k - 1));
}

std::optional<std::pair<long long, Rational>> original_decompose(const Rational& N) {
  if (N < 2) return std::nullopt;
  for (long long k = 1; pow(Rational(2), k) <= N; ++k) {
    Rational f = N - pow(Rational(2), k);
    if (f <= 2) return std::make_pair(k, f);
  }
  return std::nullopt;
}

Rational jeep_one_way(const Rational& F, const Rational& N) {
  if (F <= 0 || N <= 0) throw DomainError("jeep formulas require F > 0 and N > 0");
  const BigInt loads = (N / F).floor();
  const long long m = to_ll(loads);
  Rational total = 0;
  for (long long i = 1; i <= m; ++i) total += F / (2 * i - 1);
  return total + (N - F * m) / (2 * m + 1);
}

Rational jeep_round_trip(const Rational& F, const Rational& N) {
  if (F <= 0 || N <= 0) throw DomainError("jeep formulas require F > 0 and N > 0");
  const long long m = to_ll((N / F).floor());
  Rational total = 0;
  for (long long i = 1; i <= m; ++i) total += F / (2 * i);
  return total + (N - F * m) / (2 * m + 2);
}

}  // namespace dromedary
