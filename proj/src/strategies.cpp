#include "dromedary/strategies.hpp"

#include "dromedary/closed_forms.hpp"

#include <algorithm>
#include <numeric>

namespace dromedary {

namespace {

/// Emits relative events while tracking where the camel is and what it
/// carries. Zero-length legs are dropped.
class Builder {
 public:
  const Rational& pos() const { return pos_; }
  int load() const { return load_; }

  void walk_to(const Rational& target) {
    if (target == pos_) return;
    events_.push_back(Event::move(target - pos_));
    pos_ = target;
  }

  void eat(int times = 1) {
    for (int i = 0; i < times; ++i) events_.push_back(Event::eat());
  }

  /// Eat that the caller knows is served from the carried load.
  void eat_carried() {
    eat();
    --load_;
  }

  void pickup(int count) {
    events_.push_back(Event::pickup(count));
    load_ += count;
  }

  void drop(int count) {
    events_.push_back(Event::drop(count));
    load_ -= count;
  }

  /// Picks up `count` bananas here, walks them to `target` and drops them.
  void carry(int count, const Rational& target) {
    if (target == pos_) return;
    pickup(count);
    walk_to(target);
    drop(count);
  }

  void append(std::span<const Event> sub) {
    for (const Event& e : sub) {
      events_.push_back(e);
      if (e.kind == Event::Kind::Move) pos_ += e.delta;
      if (e.kind == Event::Kind::Pickup) load_ += e.count;
      if (e.kind == Event::Kind::Drop) load_ -= e.count;
    }
  }

  /// Appends everything after the leading Eat of `sub`.
  void append_without_first_eat(const Itinerary& sub) {
    if (sub.empty() || sub.front().kind != Event::Kind::Eat)
      throw std::logic_error("sub-itinerary does not start with a meal");
    append(std::span<const Event>(sub).subspan(1));
  }

  Itinerary take() { return std::exchange(events_, {}); }

 private:
  Rational pos_ = 0;
  int load_ = 0;
  Itinerary events_;
};

long long to_ll(const BigInt& v) { return static_cast<long long>(v); }

Rational pow3(long long e) { return pow(Rational(3), e); }

/// Itinerary split at the first return to the origin with an empty stomach.
/// `prefix` only burns the initial fractional fuel.
struct Stage {
  Itinerary prefix;
  Itinerary body;
};
/// Relays `units` loads of `unit` bananas from the origin to `x`, eating only
/// at the origin. Starts with stomach `s0` and `fuel` spare bananas, where
/// s0 + fuel == (2 units - 1) x + 1, and ends at `x` with one unit of fuel in
/// the stomach and every load cached at `x`.
///
/// The work is split into trips. Every trip leaves the origin carrying a load
/// and walks back down pushing lower loads forward, so no mile is walked
/// forward empty-handed. The last trip starts on two fresh bananas and
/// gathers every load at `x`.
Stage relay(int units, int unit, const Rational& x, const Rational& s0, int fuel) {
  const Rational phi = s0 + fuel;
  if (x <= 0 || x > 1 || phi != (2 * units - 1) * x + 1)
    throw std::logic_error("relay: inconsistent fuel budget");

  // trip budgets: {fuel already in the stomach, bananas eaten first}
  std::vector<std::pair<Rational, int>> trips;
  const int pairs = fuel / 2;
  const int odd = fuel % 2;
  if (s0 > 0 || odd) trips.push_back({s0, odd});
  for (int i = 0; i < pairs; ++i) trips.push_back({0, 2});
  const bool has_prefix = trips.size() > 1 && s0 > 0;
  if (static_cast<std::size_t>(units) < trips.size()) throw std::logic_error("relay: more trips than loads");

  std::vector<Rational> at(static_cast<std::size_t>(units), Rational(0));
  auto at_origin = [&] { return static_cast<std::size_t>(std::count(at.begin(), at.end(), Rational(0))); };
  auto pending_descending = [&] {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < at.size(); ++i)
      if (at[i] < x) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) { return at[a] > at[c]; });
    return idx;
  };

  Builder b;
  Stage out;
  for (std::size_t trip = 0; trip < trips.size(); ++trip) {
    const auto& [stomach, meal] = trips[trip];
    b.eat(meal);
    Rational budget = stomach + meal;
    const bool last = trip + 1 == trips.size();
    const std::size_t reserved = trips.size() - trip - 1;

    auto first = std::find(at.begin(), at.end(), Rational(0));
    const Rational reach = last ? x : std::min(x, budget / 2);
    b.carry(unit, reach);
    *first = reach;
    budget -= reach;

    if (last) {
      // gather everything at x and keep one unit of fuel
      for (std::size_t i : pending_descending()) {
        b.walk_to(at[i]);
        budget -= 2 * (x - at[i]);
        b.carry(unit, x);
        at[i] = x;
      }
      if (budget != 1) throw std::logic_error("relay: final trip does not end on one unit of fuel");
      break;
    }

    budget -= reach;  // the walk home
    for (std::size_t i : pending_descending()) {
      if (budget == 0) break;
      if (at[i] > b.pos()) continue;
      if (at[i] == 0 && at_origin() <= reserved) continue;
      const Rational from = at[i];
      const Rational step = std::min(budget / 2, x - from);
      b.walk_to(from);
      b.carry(unit, from + step);
      b.walk_to(from);
      at[i] += step;
      budget -= 2 * step;
    }
    b.walk_to(0);
    if (budget != 0) throw std::logic_error("relay: could not spend a trip's fuel");
    if (trip == 0 && has_prefix) out.prefix = b.take();
  }
  out.body = b.take();
  return out;
}

Itinerary flatten(const Stage& s) {
  Itinerary out = s.prefix;
  out.insert(out.end(), s.body.begin(), s.body.end());
  return out;
}

// B = 1 one-way ------------------------------------------------------------

Stage b1_one_way_parts(const Rational& N) {
  if (N == 2) return {{}, {Event::eat(), Event::eat(), Event::move(2)}};
  // smallest k with N <= (3^(k+1) + 3) / 2
  long long k = 0;
  while (N > (pow3(k + 1) + 3) / 2) ++k;
  const Rational n = (pow3(k) + 1) / 2;
  const Rational x = (N - n - 1) / (2 * n - 1);
  Stage sub = b1_one_way_parts(n + 1);
  if (x == 0) return sub;

  const int units = static_cast<int>(to_ll(n.num()));
  const int fuel = static_cast<int>(to_ll(N.floor())) - units;
  Stage stage = relay(units, 1, x, N.frac(), fuel);
  Builder b;
  b.append(stage.body);
  b.append_without_first_eat(flatten(sub));
  return {stage.prefix, b.take()};
}

Itinerary b1_delivery_events(int j) {
  if (j == 0) return {};
  if (j == 1) {
    return {Event::eat(), Event::eat(), Event::pickup(1), Event::move(1), Event::drop(1), Event::move(-1)};
  }
  const long long n = to_ll(pow3(j - 1).num());
  Builder b;
  for (long long i = 0; i + 1 < n; ++i) {
    b.eat(2);
    b.carry(1, 1);
    b.walk_to(0);
  }
  b.eat(2);
  b.carry(1, 1);
  // one of the n bananas at position 1 is kept for the walk home
  b.append_without_first_eat(b1_delivery_events(j - 1));
  b.eat();
  b.walk_to(0);
  return b.take();
}

// B = 2 round trip ---------------------------------------------------------

/// Doubling construction for 2^k bananas; the innermost turnaround is pulled
/// in by `shorten`, which leaves 2 * shorten fuel in the stomach at the end.
Itinerary b2_power_of_two(long long k, const Rational& shorten) {
  if (k == 1) {
    const Rational reach = 1 - shorten;
    return {Event::eat(), Event::eat(), Event::move(reach), Event::move(-reach)};
  }
  const long long trips = to_ll(pow(Rational(2), k - 2).num());
  Builder b;
  for (long long i = 0; i + 1 < trips; ++i) {
    b.eat(2);
    b.carry(2, 1);
    b.walk_to(0);
  }
  b.eat(2);
  b.carry(2, 1);
  b.append_without_first_eat(b2_power_of_two(k - 1, shorten));
  b.eat();
  b.walk_to(0);
  return b.take();
}

/// Out-and-back for 2 <= N <= 4 (B = 2) or 1 <= N <= 3 (B = 1): eat what
/// the stomach takes, carry the rest, turn at N/2.
Itinerary out_and_back(const Rational& N, int back_capacity) {
  Builder b;
  Rational stomach = N.frac();
  int cached = static_cast<int>(to_ll(N.floor()));
  while (stomach <= 1 && cached > 0) {
    b.eat();
    stomach += 1;
    --cached;
  }
  const int carried = std::min(cached, back_capacity);
  if (carried != cached) throw std::logic_error("out_and_back: bananas left behind");
  if (carried > 0) b.pickup(carried);
  const Rational turn = N / 2;
  if (stomach < turn) {
    b.walk_to(stomach);
    for (int i = 0; i < carried; ++i) b.eat_carried();
    b.walk_to(turn);
  } else {
    b.walk_to(turn);
    for (int i = 0; i < carried; ++i) b.eat_carried();
  }
  b.walk_to(0);
  return b.take();
}

Itinerary b2_branch_short(const Rational& N, long long k, int n) {
  const Rational x = (N - 2 * n) / (2 * n - 1);
  Builder b;
  if (x > 0) {
    // all walking fuel fits in the stomach at once
    b.eat(static_cast<int>(to_ll(N.floor())) - 2 * n);
    for (int i = 0; i + 1 < n; ++i) {
      b.carry(2, x);
      b.walk_to(0);
    }
    b.carry(2, x);
  }
  b.append(b2_power_of_two(k, x / 2));
  b.walk_to(0);
  return b.take();
}

Itinerary b2_branch_relay(const Rational& N, long long k, int n) {
  const Rational x = (N - 1 - 2 * n) / (2 * n - 1);
  Builder b;
  if (x == 0) {
    b.eat();
  } else {
    const int fuel = static_cast<int>(to_ll(N.floor())) - 2 * n;
    b.append(flatten(relay(n, 2, x, N.frac(), fuel)));
  }
  b.append_without_first_eat(b2_power_of_two(k, 0));
  b.eat();
  b.walk_to(0);
  return b.take();
}

// Original camel (B = 1, S = 1) ----------------------------------------------

/// Camel at y with `fuel` in its stomach, one banana at y and one at
/// z in [y, y + fuel]. Ends 2 miles past w = y/3 + 2z/3 + fuel/3.
void original_pair_finish(Builder& b, const Rational& y, const Rational& z, const Rational& fuel) {
  const Rational w = y / 3 + 2 * z / 3 + fuel / 3;
  b.walk_to(y);
  if (w != y) {
    b.carry(1, w);
    b.walk_to(z);
    b.pickup(1);
    b.walk_to(w);
  } else {
    b.pickup(1);
  }
  b.eat();  // the banana cached at w
  b.walk_to(w + 1);
  b.eat_carried();
  b.walk_to(w + 2);
}

/// Camel at x with `fuel` in its stomach, one banana at x and two at
/// y in [x, x + fuel].
void original_triple_finish(Builder& b, const Rational& x, const Rational& y, const Rational& fuel) {
  const Rational z = (x + y + fuel) / 2;
  b.walk_to(x);
  b.carry(1, z);
  b.walk_to(y);
  b.eat();
  original_pair_finish(b, y, z, 1);
}

/// Camel at x, empty stomach, 4n - 2 bananas at x and two at y in
/// [x, x + 1/2]. Leaves the camel at x + 1/2 with 2n - 2 bananas there and two
/// at x/2 + y/2 + 5/8.
void original_half_step(Builder& b, long long n, const Rational& x, const Rational& y) {
  const Rational half(rational(1, 2));
  const Rational eighth(rational(1, 8));
  const Rational z = x / 2 + y / 2 + half;
  b.walk_to(x);
  for (long long i = 0; i < 2 * n - 2; ++i) {
    b.eat();
    b.carry(1, x + half);
    b.walk_to(x);
  }
  b.eat();
  b.carry(1, z);
  b.walk_to(y);
  b.eat();
  b.carry(1, z + eighth);
  b.walk_to(z);
  b.carry(1, z + eighth);
  b.walk_to(x + half);
}

/// Camel at x, empty stomach, 2^k - 2 bananas at x, two at y in [x, x + 1/2].
void original_descend(Builder& b, long long k, const Rational& x, const Rational& y) {
  if (k == 2) {
    b.walk_to(x);
    b.eat();
    original_triple_finish(b, x, y, 1);
    return;
  }
  const long long n = to_ll(pow(Rational(2), k - 2).num());
  original_half_step(b, n, x, y);
  original_descend(b, k - 1, x + rational(1, 2), x / 2 + y / 2 + rational(5, 8));
}

ProblemSpec make_spec(int B, int S, const Rational& N, Variant v) {
  ProblemSpec spec;
  spec.back_capacity = B;
  spec.stomach_capacity = S;
  spec.bananas = N;
  spec.variant = v;
  return spec;
}

}  // namespace

StrategyOutcome b1_one_way_strategy(const Rational& N) {
  if (N < 2) throw DomainError("b1-one-way requires N >= 2");
  StrategyOutcome out;
  out.spec = make_spec(1, 2, N, Variant::OneWay);
  out.itinerary = flatten(b1_one_way_parts(N));
  out.claimed_distance = b1_one_way_exact(N);
  return out;
}

StrategyOutcome b1_delivery_strategy(int j) {
  if (j < 0) throw DomainError("b1-delivery requires j >= 0");
  if (j > 12) throw DomainError("b1-delivery supports j <= 12");
  StrategyOutcome out;
  out.spec = make_spec(1, 2, pow3(j), Variant::Delivery);
  out.spec.delivery_target = Rational(j);
  out.itinerary = b1_delivery_events(j);
  out.claimed_distance = j;
  return out;
}

StrategyOutcome b1_round_trip_strategy(const Rational& N) {
  if (N < 1) throw DomainError("b1-round-trip requires N >= 1");
  StrategyOutcome out;
  out.spec = make_spec(1, 2, N, Variant::RoundTrip);
  out.claimed_distance = b1_round_trip_exact(N);
  if (N <= 3) {
    out.itinerary = out_and_back(N, 1);
    return out;
  }
  // drop bananas on 1..k for the way home, then run the one-way plan with
  // the rest and bend it back to k
  long long k = 0;
  while (N > 2 * pow3(k + 1)) ++k;
  const Rational n = (pow3(k + 1) - 3) / 2;
  Stage one_way = b1_one_way_parts(N - n);
  Builder b;
  if (k > 0 && N.frac() > 0 && one_way.prefix.empty()) {
    // The top relay stage has a single trip, so the fractional fuel cannot be
    // used before the deliveries. Burn it and plan for floor(N) instead.
    const Rational half = N.frac() / 2;
    b.walk_to(half);
    b.walk_to(0);
    StrategyOutcome whole = b1_round_trip_strategy(Rational(N.floor()));
    b.append(whole.itinerary);
    out.itinerary = b.take();
    out.claimed_distance = whole.claimed_distance;
    return out;
  }

  b.append(one_way.prefix);
  for (int j = 1; j <= k; ++j) b.append(b1_delivery_events(j));
  Itinerary& body = one_way.body;
  if (body.empty() || body.back() != Event::move(2)) throw std::logic_error("b1-round-trip: unexpected one-way ending");
  body.pop_back();
  b.append(body);
  const Rational reach = (b.pos() + 2 + k) / 2;
  b.walk_to(reach);
  b.walk_to(k);
  for (long long pos = k; pos > 0; --pos) {
    b.eat();
    b.walk_to(pos - 1);
  }
  out.itinerary = b.take();
  return out;
}

StrategyOutcome b2_round_trip_strategy(const Rational& N) {
  if (N < 2) throw DomainError("b2-round-trip requires N >= 2");
  StrategyOutcome out;
  out.spec = make_spec(2, 2, N, Variant::RoundTrip);
  out.claimed_distance = b2_round_trip_lower(N);
  if (N <= 4) {
    out.itinerary = out_and_back(N, 2);
    return out;
  }
  const long long k = floor_log2(N);
  const int n = static_cast<int>(to_ll(pow(Rational(2), k - 1).num()));
  std::optional<Rational> relay_reach, short_reach;
  if (N >= 2 * n + 1) relay_reach = (N - 1 - 2 * n) / (2 * n - 1) + k;
  if (N <= 2 * n + 2) short_reach = (N - 2 * n) / (4 * n - 2) + k;
  const bool use_relay = relay_reach && (!short_reach || *relay_reach >= *short_reach);
  out.itinerary = use_relay ? b2_branch_relay(N, k, n) : b2_branch_short(N, k, n);
  return out;
}

StrategyOutcome b2_stomach_credit_strategy(const Rational& N) {
  if (N < 2) throw DomainError("b2-credit requires N >= 2");
  StrategyOutcome out;
  if (N < 4) {
    out = b2_round_trip_strategy(N);
  } else {
    const long long k = floor_log2(N);
    const int n = static_cast<int>(to_ll(pow(Rational(2), k - 1).num()));
    // extra fuel that the camel carries home unused
    const Rational physical = N + 2 - N / (2 * n);
    out.spec = make_spec(2, 2, physical, Variant::RoundTrip);
    out.itinerary = b2_branch_relay(physical, k, n);
  }
  out.spec.accounting = Accounting::CreditFinalStomach;
  out.claimed_distance = p_inv(2, N);
  out.claimed_consumption = N;
  return out;
}

StrategyOutcome original_one_way_strategy(long long k, const Rational& f) {
  if (k < 1) throw DomainError("original requires k >= 1");
  if (k > 40) throw DomainError("original supports k <= 40");
  if (f < 0 || f > 2) throw DomainError("original requires 0 <= f <= 2");
  const Rational N = pow(Rational(2), k) + f;
  StrategyOutcome out;
  out.spec = make_spec(1, 1, N, Variant::OneWay);
  out.claimed_distance = original_exact(k, f);

  Builder b;
  const Rational one(1);
  if (k == 1) {
    if (f < 1) {
      original_pair_finish(b, 0, 0, f);
    } else if (f == 1) {
      b.eat();
      original_pair_finish(b, 0, 0, 1);
    } else if (f < 2) {
      original_triple_finish(b, 0, 0, f - 1);
    } else {
      b.eat();
      original_triple_finish(b, 0, 0, 1);
    }
    out.itinerary = b.take();
    return out;
  }

  // move two bananas to y = f/4, spending exactly f miles
  const Rational y = f / 4;
  if (f <= 1) {
    if (f == 1) b.eat();
    for (int i = 0; i < 2; ++i) {
      b.carry(1, y);
      b.walk_to(0);
    }
  } else {
    if (f == 2) b.eat();
    const Rational w = f / 2 - rational(1, 2);
    b.carry(1, w);
    b.walk_to(0);
    b.eat();
    b.carry(1, y);
    if (y != w) {
      b.walk_to(w);
      b.carry(1, y);
    }
    b.walk_to(0);
  }
  original_descend(b, k, 0, y);
  out.itinerary = b.take();
  return out;
}

const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names = {"b1-one-way",    "b1-delivery", "b1-round-trip",
                                                 "b2-round-trip", "b2-credit",   "original"};
  return names;
}

StrategyOutcome make_strategy(const std::string& name, const StrategyParams& params) {
  auto need_N = [&]() -> const Rational& {
    if (!params.N) throw DomainError(name + " requires --N");
    return *params.N;
  };
  if (name == "b1-one-way") return b1_one_way_strategy(need_N());
  if (name == "b1-round-trip") return b1_round_trip_strategy(need_N());
  if (name == "b2-round-trip") return b2_round_trip_strategy(need_N());
  if (name == "b2-credit") return b2_stomach_credit_strategy(need_N());
  if (name == "b1-delivery") {
    if (!params.j) throw DomainError("b1-delivery requires --j");
    return b1_delivery_strategy(*params.j);
  }
  if (name == "original") {
    if (params.k && params.f) return original_one_way_strategy(*params.k, *params.f);
    if (params.N) {
      auto split = original_decompose(*params.N);
      if (!split) throw DomainError("original requires N = 2^k + f with k >= 1 and 0 <= f <= 2");
      return original_one_way_strategy(split->first, split->second);
    }
    throw DomainError("original requires --k and --f (or --N)");
  }
  throw DomainError("unknown strategy '" + name + "'");
}

StrategyCheck validate_strategy(const StrategyOutcome& outcome) {
  StrategyCheck check;
  check.report = run(outcome.spec, outcome.itinerary);
  check.distance_matches = check.report.farthest == outcome.claimed_distance;
  if (outcome.claimed_consumption)
    check.consumption_matches = check.report.counted_consumption == *outcome.claimed_consumption;
  if (outcome.spec.stomach_capacity == 2)
    check.potential_monotone = assert_monotone(potential_trace(outcome.spec, outcome.itinerary));
  return check;
}

}  // namespace dromedary
