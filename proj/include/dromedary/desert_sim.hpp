#pragma once

#include "dromedary/problem.hpp"
#include "dromedary/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dromedary {

/// One itinerary step. Moves are relative, so an itinerary can be replayed
/// from any starting position.
struct Event {
  enum class Kind { Move, Eat, Pickup, Drop };

  Kind kind = Kind::Eat;
  Rational delta;  // Move only, nonzero
  int count = 0;   // Pickup / Drop only, positive

  static Event move(Rational delta);
  static Event eat();
  static Event pickup(int count);
  static Event drop(int count);

  friend bool operator==(const Event&, const Event&) = default;
};

using Itinerary = std::vector<Event>;

/// An event that breaks the movement or eating rules. `index` is the
/// zero-based position of the offending event (npos for a final-state
/// failure such as an unmet round-trip condition).
class SimError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SimError(std::size_t index, std::string reason);

  std::size_t index() const { return index_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t index_;
  std::string reason_;
};

struct SimReport {
  Rational farthest;
  WorldState final_state;
  int bananas_eaten = 0;
  bool returned = false;
  /// Variant success condition (return for round trips, delivered banana
  /// for deliveries; always true for one-way trips).
  bool success = false;
  /// Initial stomach fuel plus whole bananas eaten, minus the final stomach
  /// fuel under stomach-credit accounting.
  Rational counted_consumption;
  Rational distance_walked;
};

struct Checkpoint {
  Rational position;
  Rational value;
  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Potential values sampled whenever the stomach holds exactly one unit.
struct PotentialTrace {
  std::vector<Checkpoint> checkpoints;
};

/// Applies one event. Throws SimError (index 0) when the event is illegal.
WorldState apply_event(const ProblemSpec& spec, const WorldState& state, const Event& event);

/// Replays an itinerary from initial_state(spec). Illegal events throw
/// SimError carrying their index; an unmet variant condition is reported
/// through `success`, not thrown.
SimReport run(const ProblemSpec& spec, std::span<const Event> itinerary);

/// Sum of p_B over the remaining bananas minus (B/2) p_B(camel position).
Rational potential(int B, const WorldState& state);

/// Requires stomach capacity 2.
PotentialTrace potential_trace(const ProblemSpec& spec, std::span<const Event> itinerary);

/// True iff the checkpoint values never increase.
bool assert_monotone(const PotentialTrace& trace);

}  // namespace dromedary
