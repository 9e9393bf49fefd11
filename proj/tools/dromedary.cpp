// Command-line front end. Each subcommand parses its flags with CLI11 and
// hands off to the matching dromedary::cli command.
#include "dromedary/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace dromedary;

namespace {

Rational to_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw DomainError(std::string(flag) + ": " + e.what());
  }
}

std::optional<Rational> to_rational(const std::optional<std::string>& text, const char* flag) {
  if (!text) return std::nullopt;
  return to_rational(*text, flag);
}

struct SpecFlags {
  int B = 1;
  int S = 2;
  std::string N;
  std::string variant = "one-way";
  std::string accounting = "count-all";
  std::optional<std::string> target;

  void attach(CLI::App* cmd) {
    cmd->add_option("--B", B, "bananas carried on the back");
    cmd->add_option("--S", S, "stomach capacity");
    cmd->add_option("--N", N, "number of bananas (p/q or decimal)")->required();
    cmd->add_option("--variant", variant, "one-way, round-trip or delivery");
    cmd->add_option("--accounting", accounting, "count-all or credit");
    cmd->add_option("--target", target, "delivery position");
  }

  ProblemSpec build() const {
    ProblemSpec spec;
    spec.back_capacity = B;
    spec.stomach_capacity = S;
    spec.bananas = to_rational(N, "--N");
    spec.variant = parse_variant(variant);
    spec.accounting = parse_accounting(accounting);
    spec.delivery_target = to_rational(target, "--target");
    spec.validate();
    return spec;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Camel and banana desert crossing: bounds, strategies, simulation and search"};
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and exact distances as JSON");
  std::string b_problem = "camel", b_N, b_variant = "one-way";
  int b_B = 1;
  std::optional<std::string> b_F;
  bounds->add_option("--problem", b_problem, "camel, original or jeep");
  bounds->add_option("--B", b_B, "bananas carried on the back");
  bounds->add_option("--N", b_N, "number of bananas")->required();
  bounds->add_option("--variant", b_variant, "one-way or round-trip");
  bounds->add_option("--F", b_F, "jeep tank size");

  // strategy
  auto* strategy = app.add_subcommand("strategy", "generate and self-validate a strategy itinerary");
  std::string s_name;
  std::optional<std::string> s_N, s_f, s_out;
  std::optional<int> s_j;
  std::optional<long long> s_k;
  strategy->add_option("generator", s_name, "b1-one-way, b1-delivery, b1-round-trip, b2-round-trip, b2-credit, original")
      ->required();
  strategy->add_option("--N", s_N, "number of bananas");
  strategy->add_option("--j", s_j, "delivery target");
  strategy->add_option("--k", s_k, "original problem: N = 2^k + f");
  strategy->add_option("--f", s_f, "original problem: N = 2^k + f");
  strategy->add_option("--out", s_out, "itinerary output file");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "replay an itinerary file and report as JSON");
  std::string m_path = "-";
  bool m_potential = false;
  SpecFlags m_spec;
  simulate->add_option("file", m_path, "itinerary file, - for standard input");
  m_spec.attach(simulate);
  simulate->add_flag("--check-potential", m_potential, "also report the potential trace");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive grid search for the optimum");
  SpecFlags o_spec;
  int o_q = 2;
  std::optional<std::string> o_max;
  o_spec.attach(oracle);
  oracle->add_option("--q", o_q, "grid denominator");
  oracle->add_option("--max-position", o_max, "search horizon (default N)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV table of bounds over a range of N");
  std::string w_problem = "camel", w_variant = "one-way", w_from, w_to, w_step = "1";
  int w_B = 1;
  std::optional<std::string> w_F;
  sweep->add_option("--problem", w_problem, "camel, original or jeep");
  sweep->add_option("--B", w_B, "bananas carried on the back");
  sweep->add_option("--variant", w_variant, "one-way or round-trip");
  sweep->add_option("--from", w_from, "first N")->required();
  sweep->add_option("--to", w_to, "last N")->required();
  sweep->add_option("--step", w_step, "increment of N");
  sweep->add_option("--F", w_F, "jeep tank size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kDomain;
  }

  try {
    if (*bounds) {
      cli::BoundsOptions opt{b_problem, b_B, to_rational(b_N, "--N"), parse_variant(b_variant),
                             to_rational(b_F, "--F")};
      return cli::cmd_bounds(opt, std::cout, std::cerr);
    }
    if (*strategy) {
      cli::StrategyOptions opt;
      opt.name = s_name;
      opt.params.N = to_rational(s_N, "--N");
      opt.params.j = s_j;
      opt.params.k = s_k;
      opt.params.f = to_rational(s_f, "--f");
      opt.out_path = s_out;
      return cli::cmd_strategy(opt, std::cout, std::cerr);
    }
    if (*simulate) {
      cli::SimulateOptions opt{m_path, m_spec.build(), m_potential};
      return cli::cmd_simulate(opt, std::cin, std::cout, std::cerr);
    }
    if (*oracle) {
      cli::OracleOptions opt;
      opt.spec = o_spec.build();
      opt.grid.q = o_q;
      opt.grid.max_position = to_rational(o_max, "--max-position");
      opt.budget = cli::state_budget_from(std::getenv("DROMEDARY_STATE_BUDGET"));
      return cli::cmd_oracle(opt, std::cout, std::cerr);
    }
    if (*sweep) {
      cli::SweepOptions opt{w_problem,
                            w_B,
                            parse_variant(w_variant),
                            to_rational(w_from, "--from"),
                            to_rational(w_to, "--to"),
                            to_rational(w_step, "--step"),
                            to_rational(w_F, "--F")};
      return cli::cmd_sweep(opt, std::cout, std::cerr);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kDomain;
  }
  return cli::kDomain;
}
