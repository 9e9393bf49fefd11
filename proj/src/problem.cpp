#include "dromedary/problem.hpp"

namespace dromedary {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::OneWay: return "one-way";
    case Variant::RoundTrip: return "round-trip";
    case Variant::Delivery: return "delivery";
  }
  return "?";
}

std::string to_string(Accounting a) {
  return a == Accounting::CountAll ? "count-all" : "credit-final-stomach";
}

Variant parse_variant(const std::string& s) {
  if (s == "one-way") return Variant::OneWay;
  if (s == "round-trip") return Variant::RoundTrip;
  if (s == "delivery") return Variant::Delivery;
  throw DomainError("unknown variant '" + s + "' (expected one-way, round-trip or delivery)");
}

Accounting parse_accounting(const std::string& s) {
  if (s == "count-all") return Accounting::CountAll;
  if (s == "credit" || s == "credit-final-stomach") return Accounting::CreditFinalStomach;
  throw DomainError("unknown accounting '" + s + "' (expected count-all or credit)");
}

void ProblemSpec::validate() const {
  if (back_capacity < 1) throw DomainError("back capacity must be >= 1");
  if (stomach_capacity != 1 && stomach_capacity != 2)
    throw DomainError("stomach capacity must be 1 or 2");
  if (bananas <= 0) throw DomainError("banana count must be > 0");
  if (variant == Variant::Delivery) {
    if (stomach_capacity != 2 || back_capacity > 2)
      throw DomainError("delivery requires stomach capacity 2 and back capacity 1 or 2");
    if (!delivery_target || *delivery_target < 0)
      throw DomainError("delivery requires a nonnegative target position");
  }
  if (accounting == Accounting::CreditFinalStomach && variant != Variant::RoundTrip)
    throw DomainError("stomach credit accounting only applies to round trips");
}

int WorldState::cached_total() const {
  int total = 0;
  for (const auto& [pos, count] : caches) total += count;
  return total;
}

int WorldState::cached_at(const Rational& pos) const {
  auto it = caches.find(pos);
  return it == caches.end() ? 0 : it->second;
}

WorldState initial_state(const ProblemSpec& spec) {
  spec.validate();
  WorldState state;
  BigInt whole = spec.bananas.floor();
  state.stomach = spec.bananas.frac();
  if (whole > 0) state.caches[Rational(0)] = static_cast<int>(whole);
  return state;
}

}  // namespace dromedary
