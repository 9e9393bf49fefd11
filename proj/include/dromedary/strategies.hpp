#pragma once

#include "dromedary/desert_sim.hpp"
#include "dromedary/problem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dromedary {

/// A generated itinerary together with the instance it solves and the
/// distance it is supposed to reach.
struct StrategyOutcome {
  Itinerary itinerary;
  Rational claimed_distance;
  ProblemSpec spec;
  /// Set when the generator also promises a counted consumption.
  std::optional<Rational> claimed_consumption;
};

/// B = 1, S = 2, one way, N >= 2. Reaches p_inv(1, 2N - 3) + 2.
StrategyOutcome b1_one_way_strategy(const Rational& N);

/// B = 1, S = 2: leaves one banana at position j and returns, using 3^j bananas.
StrategyOutcome b1_delivery_strategy(int j);

/// B = 1, S = 2, round trip, N >= 1. Reaches p_inv(1, N) + 1/2.
StrategyOutcome b1_round_trip_strategy(const Rational& N);

/// B = 2, S = 2, round trip, N >= 2. Reaches b2_round_trip_lower(N).
StrategyOutcome b2_round_trip_strategy(const Rational& N);

/// B = 2, S = 2, round trip with the final stomach fuel refunded. Reaches
/// p_inv(2, N) with a counted consumption of exactly N.
StrategyOutcome b2_stomach_credit_strategy(const Rational& N);

/// Original camel (B = 1, S = 1) with N = 2^k + f bananas, 0 <= f <= 2.
StrategyOutcome original_one_way_strategy(long long k, const Rational& f);

/// Names accepted by make_strategy.
const std::vector<std::string>& strategy_names();

struct StrategyParams {
  std::optional<Rational> N;
  std::optional<int> j;
  std::optional<long long> k;
  std::optional<Rational> f;
};

/// Dispatch by generator name (b1-one-way, b1-delivery, b1-round-trip,
/// b2-round-trip, b2-credit, original).
StrategyOutcome make_strategy(const std::string& name, const StrategyParams& params);

/// Outcome of replaying a strategy through the simulator.
struct StrategyCheck {
  SimReport report;
  bool distance_matches = false;
  bool consumption_matches = true;
  /// Only evaluated for stomach capacity 2.
  std::optional<bool> potential_monotone;

  bool ok() const {
    return report.success && distance_matches && consumption_matches && potential_monotone.value_or(true);
  }
};

/// Runs the simulator (and the potential monitor when S = 2) on the outcome.
/// Illegal events propagate as SimError.
StrategyCheck validate_strategy(const StrategyOutcome& outcome);

}  // namespace dromedary
