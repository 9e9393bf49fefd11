#include "dromedary/desert_sim.hpp"

#include "dromedary/closed_forms.hpp"

namespace dromedary {

Event Event::move(Rational delta) {
  Event e;
  e.kind = Kind::Move;
  e.delta = std::move(delta);
  return e;
}

Event Event::eat() { return Event{}; }

Event Event::pickup(int count) {
  Event e;
  e.kind = Kind::Pickup;
  e.count = count;
  return e;
}

Event Event::drop(int count) {
  Event e;
  e.kind = Kind::Drop;
  e.count = count;
  return e;
}

SimError::SimError(std::size_t index, std::string reason)
    : std::runtime_error(index == npos ? reason : reason + " at event " + std::to_string(index + 1)),
      index_(index),
      reason_(std::move(reason)) {}

namespace {

[[noreturn]] void reject(std::string reason) { throw SimError(0, std::move(reason)); }

void take_from_cache(WorldState& s, int count) {
  auto it = s.caches.find(s.camel_pos);
  it->second -= count;
  if (it->second == 0) s.caches.erase(it);
}

}  // namespace

WorldState apply_event(const ProblemSpec& spec, const WorldState& state, const Event& event) {
  WorldState next = state;
  switch (event.kind) {
    case Event::Kind::Move: {
      if (event.delta == 0) reject("zero-length move");
      const Rational dist = abs(event.delta);
      if (next.stomach < dist) reject("out of fuel");
      const Rational target = next.camel_pos + event.delta;
      if (target < 0) reject("move below the desert border");
      next.stomach -= dist;
      next.camel_pos = target;
      break;
    }
    case Event::Kind::Eat: {
      if (next.stomach > spec.stomach_capacity - 1) reject("stomach full");
      if (next.cached_at(next.camel_pos) > 0) {
        take_from_cache(next, 1);
      } else if (next.load > 0) {
        next.load -= 1;
      } else {
        reject("no banana to eat");
      }
      next.stomach += 1;
      break;
    }
    case Event::Kind::Pickup: {
      if (event.count < 1) reject("pickup count must be positive");
      if (next.cached_at(next.camel_pos) < event.count) reject("not enough cached bananas to pick up");
      if (next.load + event.count > spec.back_capacity) reject("back capacity exceeded");
      take_from_cache(next, event.count);
      next.load += event.count;
      break;
    }
    case Event::Kind::Drop: {
      if (event.count < 1) reject("drop count must be positive");
      if (next.load < event.count) reject("not enough bananas carried to drop");
      next.load -= event.count;
      next.caches[next.camel_pos] += event.count;
      break;
    }
  }
  return next;
}

SimReport run(const ProblemSpec& spec, std::span<const Event> itinerary) {
  WorldState state = initial_state(spec);
  const Rational initial_fuel = state.stomach;
  SimReport report;
  for (std::size_t i = 0; i < itinerary.size(); ++i) {
    const Event& e = itinerary[i];
    try {
      state = apply_event(spec, state, e);
    } catch (const SimError& err) {
      throw SimError(i, err.reason());
    }
    if (e.kind == Event::Kind::Eat) ++report.bananas_eaten;
    if (e.kind == Event::Kind::Move) report.distance_walked += abs(e.delta);
    if (state.camel_pos > report.farthest) report.farthest = state.camel_pos;
  }
  report.returned = state.camel_pos == 0;
  switch (spec.variant) {
    case Variant::OneWay: report.success = true; break;
    case Variant::RoundTrip: report.success = report.returned; break;
    case Variant::Delivery:
      report.success = report.returned && state.cached_at(*spec.delivery_target) > 0;
      break;
  }
  report.counted_consumption = initial_fuel + report.bananas_eaten;
  if (spec.accounting == Accounting::CreditFinalStomach) report.counted_consumption -= state.stomach;
  report.final_state = std::move(state);
  return report;
}

Rational potential(int B, const WorldState& state) {
  Rational total = 0;
  for (const auto& [pos, count] : state.caches) total += count * p(B, pos);
  const Rational at_camel = p(B, state.camel_pos);
  total += state.load * at_camel;
  total -= rational(B, 2) * at_camel;
  return total;
}

PotentialTrace potential_trace(const ProblemSpec& spec, std::span<const Event> itinerary) {
  if (spec.stomach_capacity != 2)
    throw DomainError("potential trace is only defined for stomach capacity 2");
  const int B = spec.back_capacity;
  PotentialTrace trace;
  bool moved_since_checkpoint = true;
  auto record = [&](const WorldState& s) {
    if (!moved_since_checkpoint) return;
    trace.checkpoints.push_back({s.camel_pos, potential(B, s)});
    moved_since_checkpoint = false;
  };

  WorldState state = initial_state(spec);
  for (std::size_t i = 0; i < itinerary.size(); ++i) {
    const Event& e = itinerary[i];
    WorldState next;
    try {
      next = apply_event(spec, state, e);
    } catch (const SimError& err) {
      throw SimError(i, err.reason());
    }
    if (e.kind == Event::Kind::Move) {
      if (state.stomach > 1 && next.stomach <= 1) {
        // stomach falls linearly; the level-1 instant sits (stomach - 1) along the move
        WorldState at_level = state;
        const Rational step = state.stomach - 1;
        at_level.camel_pos += e.delta.sign() > 0 ? step : -step;
        at_level.stomach = 1;
        if (step > 0) moved_since_checkpoint = true;
        record(at_level);
      }
      moved_since_checkpoint = true;
    } else if (e.kind == Event::Kind::Eat && next.stomach == 1) {
      record(next);
    }
    state = std::move(next);
  }
  return trace;
}

bool assert_monotone(const PotentialTrace& trace) {
  for (std::size_t i = 1; i < trace.checkpoints.size(); ++i)
    if (trace.checkpoints[i].value > trace.checkpoints[i - 1].value) return false;
  return true;
}

}  // namespace dromedary
