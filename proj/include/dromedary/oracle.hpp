#pragma once

#include "dromedary/desert_sim.hpp"
#include "dromedary/problem.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dromedary {

/// Positions and move lengths are multiples of 1/q; nothing is placed or
/// visited beyond max_position (defaults to N).
struct GridConfig {
  int q = 2;
  std::optional<Rational> max_position;
};

struct SearchResult {
  Rational best_distance;
  Itinerary witness;
  std::uint64_t states_explored = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultStateBudget = 5'000'000;

/// Byte encoding of a grid state: camel position, stomach and farthest in
/// units of 1/q, the load, then the cache count at every grid point up to
/// the farthest cached position. Throws DomainError for off-grid values.
std::string canonical_key(const WorldState& state, const Rational& farthest, int q);

/// Exhaustive breadth-first search over grid itineraries (one-way and round
/// trip). Requires floor(N) <= 5, q * max_position <= 24 and N on the grid.
SearchResult optimal(const ProblemSpec& spec, const GridConfig& grid,
                     std::uint64_t state_budget = kDefaultStateBudget);

}  // namespace dromedary
