#pragma once

#include "dromedary/oracle.hpp"
#include "dromedary/problem.hpp"
#include "dromedary/strategies.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace dromedary::cli {

enum ExitCode : int { kOk = 0, kDomain = 2, kMismatch = 3, kBudget = 4 };

struct BoundsOptions {
  std::string problem = "camel";  // camel, original or jeep
  int B = 1;
  Rational N;
  Variant variant = Variant::OneWay;
  std::optional<Rational> F;  // jeep tank size
};

struct StrategyOptions {
  std::string name;
  StrategyParams params;
  std::optional<std::string> out_path;
};

struct SimulateOptions {
  std::string path = "-";  // "-" reads standard input
  ProblemSpec spec;
  bool check_potential = false;
};

struct OracleOptions {
  ProblemSpec spec;
  GridConfig grid;
  std::uint64_t budget = kDefaultStateBudget;
};

struct SweepOptions {
  std::string problem = "camel";
  int B = 1;
  Variant variant = Variant::OneWay;
  Rational from;
  Rational to;
  Rational step;
  std::optional<Rational> F;
};

/// Reads a state budget from DROMEDARY_STATE_BUDGET-style text, falling back
/// when the value is null. Throws DomainError on anything but a positive integer.
std::uint64_t state_budget_from(const char* text, std::uint64_t fallback = kDefaultStateBudget);

int cmd_bounds(const BoundsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_strategy(const StrategyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& opt, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace dromedary::cli
