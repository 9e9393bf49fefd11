#include "dromedary/cli.hpp"

#include "dromedary/closed_forms.hpp"
#include "dromedary/itinerary_io.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace dromedary::cli {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct Entry {
  std::string kind;  // lower, upper or exact
  std::string label;
  Rational value;
};

/// Calls `f` and records its value unless it is outside the formula's domain.
void try_add(std::vector<Entry>& entries, std::string kind, std::string label, const std::function<Rational()>& f) {
  try {
    entries.push_back({std::move(kind), std::move(label), f()});
  } catch (const DomainError&) {
  }
}

std::vector<Entry> collect_bounds(const BoundsOptions& opt) {
  std::vector<Entry> e;
  const Rational& N = opt.N;
  if (opt.problem == "jeep") {
    if (!opt.F) throw DomainError("the jeep problem requires --F");
    if (opt.variant == Variant::OneWay) {
      e.push_back({"exact", "jeep one-way", jeep_one_way(*opt.F, N)});
    } else if (opt.variant == Variant::RoundTrip) {
      e.push_back({"exact", "jeep round trip", jeep_round_trip(*opt.F, N)});
    } else {
      throw DomainError("the jeep problem has one-way and round-trip variants only");
    }
    return e;
  }
  if (opt.problem == "original") {
    if (opt.variant != Variant::OneWay) throw DomainError("the original problem is one-way only");
    if (N < 2) throw DomainError("the original problem requires N >= 2");
    try_add(e, "upper", "potential bound (S = 1)", [&] { return original_upper(N); });
    if (auto split = original_decompose(N)) {
      e.push_back({"exact", "relay construction, N = 2^k + f", original_exact(split->first, split->second)});
    }
    return e;
  }
  if (opt.problem != "camel") throw DomainError("unknown problem '" + opt.problem + "' (camel, original, jeep)");
  if (opt.B < 1) throw DomainError("back capacity B must be >= 1");
  const int B = opt.B;
  if (opt.variant == Variant::OneWay) {
    if (N < B + 1) throw DomainError("one-way bounds require N >= B + 1");
    e.push_back({"upper", "potential bound", one_way_upper(B, N)});
    e.push_back({"upper", "jeep with tank B + 2", jeep_one_way(Rational(B + 2), N)});
    if (B == 1) e.push_back({"exact", "tripling relay construction", b1_one_way_exact(N)});
  } else if (opt.variant == Variant::RoundTrip) {
    if (N < B) throw DomainError("round-trip bounds require N >= B");
    e.push_back({"upper", "potential bound", round_trip_upper(B, N)});
    e.push_back({"upper", "jeep with tank B + 2", jeep_round_trip(Rational(B + 2), N)});
    if (B == 1) e.push_back({"exact", "delivery and bend-back construction", b1_round_trip_exact(N)});
    if (B == 2) {
      try_add(e, "upper", "fuel-transport bound", [&] { return b2_round_trip_jeep_upper(N); });
      const BoundsResult r = b2_round_trip_bounds(N);
      e.push_back({r.exact ? "exact" : "lower", "doubling relay construction", r.lower});
    }
  } else {
    throw DomainError("bounds are available for one-way and round-trip variants");
  }
  return e;
}

ordered_json bounds_json(const BoundsOptions& opt, const std::vector<Entry>& entries) {
  std::optional<Rational> lower, upper;
  ordered_json list = ordered_json::array();
  for (const Entry& x : entries) {
    if (x.kind != "upper" && (!lower || x.value > *lower)) lower = x.value;
    if (x.kind != "lower" && (!upper || x.value < *upper)) upper = x.value;
    list.push_back({{"kind", x.kind}, {"label", x.label}, {"value", x.value.str()}});
  }
  ordered_json out;
  out["problem"] = opt.problem;
  if (opt.problem == "camel") out["B"] = opt.B;
  if (opt.problem == "jeep") out["F"] = opt.F->str();
  out["N"] = opt.N.str();
  out["variant"] = to_string(opt.variant);
  out["lower"] = lower ? json(lower->str()) : json(nullptr);
  out["upper"] = upper ? json(upper->str()) : json(nullptr);
  out["exact"] = lower && upper && *lower == *upper ? json(lower->str()) : json(nullptr);
  out["bounds"] = list;
  return out;
}

int domain_failure(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kDomain;
}

ordered_json spec_json(const ProblemSpec& spec) {
  ordered_json out{{"B", spec.back_capacity},
                   {"S", spec.stomach_capacity},
                   {"N", spec.bananas.str()},
                   {"variant", to_string(spec.variant)},
                   {"accounting", to_string(spec.accounting)}};
  if (spec.delivery_target) out["target"] = spec.delivery_target->str();
  return out;
}

}  // namespace

std::uint64_t state_budget_from(const char* text, std::uint64_t fallback) {
  if (text == nullptr) return fallback;
  const std::string s(text);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || value == 0 || s.front() == '-')
    throw DomainError("DROMEDARY_STATE_BUDGET must be a positive integer, got '" + s + "'");
  return value;
}

int cmd_bounds(const BoundsOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    out << bounds_json(opt, collect_bounds(opt)).dump(2) << '\n';
    return kOk;
  } catch (const DomainError& e) {
    return domain_failure(err, e);
  }
}

int cmd_strategy(const StrategyOptions& opt, std::ostream& out, std::ostream& err) {
  StrategyOutcome outcome;
  try {
    outcome = make_strategy(opt.name, opt.params);
  } catch (const DomainError& e) {
    return domain_failure(err, e);
  }

  StrategyCheck check;
  try {
    check = validate_strategy(outcome);
  } catch (const SimError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kMismatch;
  }

  const std::string text = format_itinerary(outcome.itinerary);
  std::ostream* summary = &out;
  if (opt.out_path) {
    std::ofstream file(*opt.out_path);
    if (!file) {
      err << "error: cannot write " << *opt.out_path << '\n';
      return kDomain;
    }
    file << "# " << opt.name << ", N = " << outcome.spec.bananas.str() << '\n' << text;
  } else {
    out << text;
    summary = &err;
  }

  if (!check.ok()) {
    err << "validation failed: simulated distance " << check.report.farthest.str() << ", claimed "
        << outcome.claimed_distance.str();
    if (!check.report.success) err << ", success condition not met";
    if (!check.consumption_matches) err << ", consumption " << check.report.counted_consumption.str();
    if (!check.potential_monotone.value_or(true)) err << ", potential increased";
    err << '\n';
    return kMismatch;
  }
  *summary << "distance " << check.report.farthest.str();
  if (outcome.spec.variant != Variant::OneWay) *summary << ", returned";
  if (outcome.claimed_consumption) *summary << ", consumption " << check.report.counted_consumption.str();
  *summary << ", validated\n";
  return kOk;
}

int cmd_simulate(const SimulateOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Itinerary itinerary;
  try {
    opt.spec.validate();
    if (opt.path == "-") {
      itinerary = parse_itinerary(in);
    } else {
      std::ifstream file(opt.path);
      if (!file) throw DomainError("cannot read " + opt.path);
      itinerary = parse_itinerary(file);
    }
  } catch (const std::invalid_argument& e) {
    return domain_failure(err, e);
  } catch (const DomainError& e) {
    return domain_failure(err, e);
  }

  try {
    const SimReport report = run(opt.spec, itinerary);
    ordered_json doc;
    doc["spec"] = spec_json(opt.spec);
    doc["report"] = to_json(report);
    if (opt.check_potential) {
      const PotentialTrace trace = potential_trace(opt.spec, itinerary);
      doc["potential"] = {{"checkpoints", to_json(trace)}, {"monotone", assert_monotone(trace)}};
    }
    out << doc.dump(2) << '\n';
  } catch (const SimError& e) {
    err << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    return domain_failure(err, e);
  }
  return kOk;
}

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const SearchResult r = optimal(opt.spec, opt.grid, opt.budget);
    ordered_json doc;
    doc["spec"] = spec_json(opt.spec);
    doc["q"] = opt.grid.q;
    doc["max_position"] = opt.grid.max_position.value_or(opt.spec.bananas).str();
    doc["best_distance"] = r.best_distance.str();
    doc["states_explored"] = r.states_explored;
    doc["witness"] = format_itinerary(r.witness);
    out << doc.dump(2) << '\n';
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const DomainError& e) {
    return domain_failure(err, e);
  }
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.step <= 0) return domain_failure(err, DomainError("--step must be positive"));
  if (opt.to < opt.from) return domain_failure(err, DomainError("empty range: --to is below --from"));

  const std::vector<std::string> columns = {"lower", "exact", "upper", "upper_potential", "upper_jeep"};
  out << "N,N_decimal";
  for (const auto& c : columns) out << ',' << c << ',' << c << "_decimal";
  out << '\n';

  for (Rational N = opt.from; N <= opt.to; N += opt.step) {
    BoundsOptions b{opt.problem, opt.B, N, opt.variant, opt.F};
    std::map<std::string, Rational> row;
    try {
      const std::vector<Entry> entries = collect_bounds(b);
      const ordered_json j = bounds_json(b, entries);
      for (const char* key : {"lower", "exact", "upper"})
        if (!j[key].is_null()) row[key] = Rational::parse(j[key].get<std::string>());
      for (const Entry& e : entries) {
        if (e.label.rfind("potential bound", 0) == 0) row["upper_potential"] = e.value;
        if (e.label == "fuel-transport bound" || (e.label.rfind("jeep with tank", 0) == 0 && !row.count("upper_jeep")))
          row["upper_jeep"] = e.value;
      }
    } catch (const DomainError&) {
      // outside every formula's domain: the row stays empty
    }
    out << N.str() << ',' << N.decimal(6);
    for (const auto& c : columns) {
      auto it = row.find(c);
      if (it == row.end()) {
        out << ",,";
      } else {
        out << ',' << it->second.str() << ',' << it->second.decimal(6);
      }
    }
    out << '\n';
  }
  return kOk;
}

}  // namespace dromedary::cli
