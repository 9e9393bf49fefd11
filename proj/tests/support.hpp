#pragma once

#include "dromedary/desert_sim.hpp"

#include <random>
#include <vector>

namespace dromedary::testing {

inline ProblemSpec camel(int B, const Rational& N, Variant v = Variant::OneWay, int S = 2) {
  ProblemSpec spec;
  spec.back_capacity = B;
  spec.stomach_capacity = S;
  spec.bananas = N;
  spec.variant = v;
  return spec;
}

/// Random legal itinerary: every event is drawn from the moves that are
/// legal in the current state, with move lengths on a 1/q grid (q drawn
/// from {1, 2, 3, 4, 6}) and occasionally an arbitrary fraction of the fuel.
inline Itinerary random_legal_itinerary(const ProblemSpec& spec, std::mt19937_64& rng, int max_events) {
  Itinerary out;
  WorldState s = initial_state(spec);
  std::uniform_int_distribution<int> pick(0, 99);
  const int qs[] = {1, 2, 3, 4, 6};
  for (int i = 0; i < max_events; ++i) {
    std::vector<Event> options;
    const bool can_eat = s.stomach <= spec.stomach_capacity - 1 && (s.cached_at(s.camel_pos) > 0 || s.load > 0);
    if (can_eat) options.push_back(Event::eat());
    const int here = s.cached_at(s.camel_pos);
    for (int c = 1; c <= std::min(here, spec.back_capacity - s.load); ++c) options.push_back(Event::pickup(c));
    for (int c = 1; c <= s.load; ++c) options.push_back(Event::drop(c));
    if (s.stomach > 0) {
      const int q = qs[pick(rng) % 5];
      const long long steps_fuel = static_cast<long long>((s.stomach * q).floor());
      Rational d;
      if (pick(rng) < 15) {
        d = s.stomach * rational(1 + pick(rng) % 9, 10);
      } else if (steps_fuel > 0) {
        d = rational(1 + static_cast<long long>(rng() % static_cast<unsigned long long>(steps_fuel)), q);
      }
      if (d > 0) {
        options.push_back(Event::move(d));
        options.push_back(Event::move(d));  // bias forward
        if (s.camel_pos >= d) options.push_back(Event::move(-d));
        else if (s.camel_pos > 0) options.push_back(Event::move(-s.camel_pos));
      }
    }
    if (options.empty()) break;
    const Event e = options[rng() % options.size()];
    s = apply_event(spec, s, e);
    out.push_back(e);
  }
  return out;
}

}  // namespace dromedary::testing
