#pragma once

#include "dromedary/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace dromedary {

/// Raised when an argument lies outside the hypothesis of a formula or
/// generator. Carries the violated hypothesis in what().
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Variant { OneWay, RoundTrip, Delivery };
enum class Accounting { CountAll, CreditFinalStomach };

std::string to_string(Variant v);
std::string to_string(Accounting a);
Variant parse_variant(const std::string& s);
Accounting parse_accounting(const std::string& s);

/// One problem instance: a camel that carries `back_capacity` whole bananas,
/// holds up to `stomach_capacity` units of fuel, and starts next to
/// `bananas` (possibly fractional) bananas at the desert border.
struct ProblemSpec {
  int back_capacity = 1;
  int stomach_capacity = 2;
  Rational bananas = 1;
  Variant variant = Variant::OneWay;
  Accounting accounting = Accounting::CountAll;
  /// Only used by Variant::Delivery.
  std::optional<Rational> delivery_target;

  /// Throws DomainError if the invariants do not hold.
  void validate() const;
};

/// Camel position, stomach fuel, carried load and the banana caches.
/// Cache entries with a zero count are never stored.
struct WorldState {
  Rational camel_pos = 0;
  Rational stomach = 0;
  int load = 0;
  std::map<Rational, int> caches;

  int cached_total() const;
  int cached_at(const Rational& pos) const;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

/// Camel at the border with floor(N) bananas cached there and the
/// fractional part of N already in its stomach.
WorldState initial_state(const ProblemSpec& spec);

}  // namespace dromedary
