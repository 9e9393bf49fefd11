#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dromedary/cli.hpp"
#include "dromedary/itinerary_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace dromedary;
using namespace dromedary::cli;
using nlohmann::json;

namespace {

Rational R(long long n, long long d = 1) { return rational(n, d); }

struct Output {
  int code;
  std::string out;
  std::string err;
};

template <class Options>
Output call(int (*cmd)(const Options&, std::ostream&, std::ostream&), const Options& opt) {
  std::ostringstream out, err;
  const int code = cmd(opt, out, err);
  return {code, out.str(), err.str()};
}

Output simulate(const SimulateOptions& opt, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cmd_simulate(opt, in, out, err);
  return {code, out.str(), err.str()};
}

ProblemSpec spec_of(int B, const Rational& N, Variant v = Variant::OneWay) {
  ProblemSpec s;
  s.back_capacity = B;
  s.bananas = N;
  s.variant = v;
  return s;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream cols(line);
    while (std::getline(cols, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_path(const char* name) { return (std::string("/tmp/dromedary_test_") + name); }

}  // namespace

TEST_CASE("bounds examples") {
  Output o = call(cmd_bounds, BoundsOptions{"camel", 1, 5, Variant::OneWay, {}});
  REQUIRE(o.code == kOk);
  json j = json::parse(o.out);
  CHECK(j["exact"] == "11/3");

  o = call(cmd_bounds, BoundsOptions{"camel", 2, 10, Variant::RoundTrip, {}});
  REQUIRE(o.code == kOk);
  j = json::parse(o.out);
  CHECK(j["lower"] == "22/7");
  CHECK(j["upper"] == "13/4");
  CHECK(j["exact"].is_null());

  o = call(cmd_bounds, BoundsOptions{"jeep", 1, 2, Variant::OneWay, Rational(1)});
  REQUIRE(o.code == kOk);
  CHECK(json::parse(o.out)["exact"] == "4/3");

  o = call(cmd_bounds, BoundsOptions{"original", 1, 5, Variant::OneWay, {}});
  REQUIRE(o.code == kOk);
  CHECK(json::parse(o.out)["exact"] == "17/6");

  o = call(cmd_bounds, BoundsOptions{"camel", 2, 5, Variant::RoundTrip, {}});
  j = json::parse(o.out);
  CHECK(j["exact"] == "13/6");
  bool labelled = false;
  for (const auto& entry : j["bounds"])
    if (entry["label"] == "potential bound") labelled = entry["value"] == "9/4";
  CHECK(labelled);
}

TEST_CASE("bounds domain errors exit with 2") {
  Output o = call(cmd_bounds, BoundsOptions{"camel", 1, R(3, 2), Variant::OneWay, {}});
  CHECK(o.code == kDomain);
  CHECK(o.err.find("N >= B + 1") != std::string::npos);
  CHECK(call(cmd_bounds, BoundsOptions{"jeep", 1, 2, Variant::OneWay, {}}).code == kDomain);
  CHECK(call(cmd_bounds, BoundsOptions{"martian", 1, 2, Variant::OneWay, {}}).code == kDomain);
  CHECK(call(cmd_bounds, BoundsOptions{"camel", 1, 2, Variant::Delivery, {}}).code == kDomain);
}

TEST_CASE("strategy summaries") {
  StrategyOptions opt;
  opt.name = "b1-one-way";
  opt.params.N = 2;
  opt.out_path = temp_path("s.txt");
  Output o = call(cmd_strategy, opt);
  CHECK(o.code == kOk);
  CHECK(o.out == "distance 2, validated\n");
  std::ifstream written(*opt.out_path);
  const Itinerary it = parse_itinerary(written);
  CHECK(it == Itinerary{Event::eat(), Event::eat(), Event::move(2)});

  opt.name = "b2-round-trip";
  opt.params.N = 16;
  o = call(cmd_strategy, opt);
  CHECK(o.out == "distance 4, returned, validated\n");

  opt.name = "original";
  opt.params = StrategyParams{};
  opt.params.k = 1;
  opt.params.f = 1;
  o = call(cmd_strategy, opt);
  CHECK(o.out == "distance 7/3, validated\n");

  opt.name = "b2-credit";
  opt.params = StrategyParams{};
  opt.params.N = 5;
  o = call(cmd_strategy, opt);
  CHECK(o.out == "distance 9/4, returned, consumption 5, validated\n");
  std::remove(opt.out_path->c_str());
}

TEST_CASE("strategy without --out prints the itinerary") {
  StrategyOptions opt;
  opt.name = "b1-delivery";
  opt.params.j = 1;
  const Output o = call(cmd_strategy, opt);
  CHECK(o.code == kOk);
  CHECK(o.out == "EAT\nEAT\nPICKUP 1\nMOVE 1\nDROP 1\nMOVE -1\n");
  CHECK(o.err == "distance 1, returned, validated\n");
}

TEST_CASE("strategy errors") {
  StrategyOptions opt;
  opt.name = "nope";
  opt.params.N = 2;
  CHECK(call(cmd_strategy, opt).code == kDomain);
  opt.name = "b1-one-way";
  opt.params.N = 1;
  CHECK(call(cmd_strategy, opt).code == kDomain);
}

TEST_CASE("simulate reports and rejects") {
  SimulateOptions opt;
  opt.spec = spec_of(1, 2);
  Output o = simulate(opt, "EAT\nEAT\nMOVE 2\n");
  REQUIRE(o.code == kOk);
  json j = json::parse(o.out);
  CHECK(j["report"]["farthest"] == "2");
  CHECK(j["spec"]["N"] == "2");
  CHECK_FALSE(j.contains("potential"));

  opt.spec = spec_of(1, 3);
  o = simulate(opt, "EAT\nEAT\nEAT\n");
  CHECK(o.code == kDomain);
  CHECK(o.err == "stomach full at event 3\n");

  o = simulate(opt, "EAT\nFLY 3\n");
  CHECK(o.code == kDomain);
  CHECK(o.err.find("line 2") != std::string::npos);

  opt.path = temp_path("missing_file.txt");
  CHECK(simulate(opt, "").code == kDomain);
}

TEST_CASE("simulate --check-potential on a strategy itinerary") {
  const StrategyOutcome s = b2_round_trip_strategy(10);
  SimulateOptions opt;
  opt.spec = s.spec;
  opt.check_potential = true;
  const Output o = simulate(opt, format_itinerary(s.itinerary));
  REQUIRE(o.code == kOk);
  const json j = json::parse(o.out);
  CHECK(j["potential"]["monotone"] == true);
  CHECK(j["report"]["farthest"] == "22/7");
  CHECK(j["report"]["returned"] == true);
  CHECK_FALSE(j["potential"]["checkpoints"].empty());

  opt.spec.stomach_capacity = 1;
  CHECK(simulate(opt, "").code == kDomain);
}

TEST_CASE("oracle command") {
  OracleOptions opt;
  opt.spec = spec_of(2, 2, Variant::RoundTrip);
  opt.grid.q = 2;
  Output o = call(cmd_oracle, opt);
  REQUIRE(o.code == kOk);
  const json j = json::parse(o.out);
  CHECK(j["best_distance"] == "1");
  const Itinerary witness = parse_itinerary(j["witness"].get<std::string>());
  CHECK(run(opt.spec, witness).farthest == 1);

  opt.budget = 3;
  o = call(cmd_oracle, opt);
  CHECK(o.code == kBudget);
  CHECK(o.err.find("budget") != std::string::npos);

  opt.spec = spec_of(1, 9);
  CHECK(call(cmd_oracle, opt).code == kDomain);
}

TEST_CASE("state budget from the environment value") {
  CHECK(state_budget_from(nullptr) == kDefaultStateBudget);
  CHECK(state_budget_from(nullptr, 7) == 7);
  CHECK(state_budget_from("1234") == 1234);
  CHECK_THROWS_AS(state_budget_from("0"), DomainError);
  CHECK_THROWS_AS(state_budget_from("-5"), DomainError);
  CHECK_THROWS_AS(state_budget_from("12k"), DomainError);
  CHECK_THROWS_AS(state_budget_from(""), DomainError);
}

TEST_CASE("sweep rows") {
  const Output o = call(cmd_sweep, SweepOptions{"camel", 2, Variant::RoundTrip, 2, 8, R(1, 2), {}});
  REQUIRE(o.code == kOk);
  const auto rows = csv(o.out);
  REQUIRE(rows.size() == 14);
  const auto& header = rows[0];
  auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  REQUIRE(col("upper_jeep") < header.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r[0] == "5") {
      CHECK(r[col("lower")] == "13/6");
      CHECK(r[col("exact")] == "13/6");
      CHECK(r[col("upper_jeep")] == "13/6");
      CHECK(r[col("upper_potential")] == "9/4");
      CHECK(r[col("upper_potential_decimal")] == "2.250000");
    }
    if (r[0] == "4") CHECK(r[col("exact")] == "2");
    if (r[0] == "2") CHECK(r[col("exact")] == "1");
  }
}

TEST_CASE("B = 1 sweep is tight everywhere") {
  const Output o = call(cmd_sweep, SweepOptions{"camel", 1, Variant::OneWay, 2, 20, R(1, 4), {}});
  const auto rows = csv(o.out);
  const auto& header = rows[0];
  const auto lower = std::find(header.begin(), header.end(), "lower") - header.begin();
  const auto upper = std::find(header.begin(), header.end(), "upper") - header.begin();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK_FALSE(rows[i][lower].empty());
    CHECK(rows[i][lower] == rows[i][upper]);
  }
}

TEST_CASE("sweep leaves out-of-domain cells empty and rejects bad ranges") {
  const Output o = call(cmd_sweep, SweepOptions{"camel", 2, Variant::OneWay, 1, 4, 1, {}});
  const auto rows = csv(o.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][0] == "1");
  CHECK(rows[1][2].empty());
  CHECK(rows[3][0] == "3");
  CHECK_FALSE(rows[3][6].empty());
  CHECK(call(cmd_sweep, SweepOptions{"camel", 1, Variant::OneWay, 4, 2, 1, {}}).code == kDomain);
  CHECK(call(cmd_sweep, SweepOptions{"camel", 1, Variant::OneWay, 2, 4, 0, {}}).code == kDomain);
}

TEST_CASE("output is byte-deterministic") {
  const SweepOptions s{"camel", 2, Variant::RoundTrip, 2, 12, R(1, 3), {}};
  CHECK(call(cmd_sweep, s).out == call(cmd_sweep, s).out);
  const BoundsOptions b{"camel", 2, 11, Variant::RoundTrip, {}};
  CHECK(call(cmd_bounds, b).out == call(cmd_bounds, b).out);
}
