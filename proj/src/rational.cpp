#include "dromedary/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace dromedary {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational rational(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("rational: malformed number '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("rational: malformed number '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(body.substr(0, slash), text);
    BigInt den = parse_integer(body.substr(slash + 1), text);
    value = Rational(std::move(num), std::move(den));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("rational: malformed number '" + std::string(text) + "'");
    BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? -value : value;
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) q += 1;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::decimal(int digits) const {
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  BigInt whole = n / den_;
  BigInt rem = n % den_;
  std::string out = (num_ < 0 ? "-" : "") + whole.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem / den_));
      rem %= den_;
    }
  }
  return out;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, long long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  BigInt num = boost::multiprecision::pow(base.num(), static_cast<unsigned>(exponent));
  BigInt den = boost::multiprecision::pow(base.den(), static_cast<unsigned>(exponent));
  return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace dromedary
