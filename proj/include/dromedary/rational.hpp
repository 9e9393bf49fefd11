#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dromedary {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with an arbitrary-precision numerator and a
/// positive denominator. Always kept in lowest terms, so structural
/// equality is value equality.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(BigInt value) : num_(std::move(value)) {}

  /// Throws std::domain_error when den == 0.
  Rational(BigInt num, BigInt den);

  /// Accepts "k", "p/q" and plain decimals such as "-2.375". Decimal input
  /// is converted exactly (p / 10^digits).
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  BigInt floor() const;
  BigInt ceil() const;
  /// x - floor(x), always in [0, 1).
  Rational frac() const;

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Canonical "num/den", or "k" when the value is an integer.
  std::string str() const;
  /// Truncated-toward-zero decimal expansion with a fixed number of digits.
  std::string decimal(int digits) const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// Normalized num/den; throws std::domain_error on a zero denominator.
Rational rational(long long num, long long den);

Rational abs(const Rational& x);
/// base^exponent for any integer exponent (base must be nonzero when exponent < 0).
Rational pow(const Rational& base, long long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace dromedary
