#include "dromedary/itinerary_io.hpp"

#include <sstream>

namespace dromedary {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_count(const std::string& token, std::size_t line_no) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used == token.size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("line " + std::to_string(line_no) + ": expected a positive integer, got '" +
                              token + "'");
}

}  // namespace

Itinerary parse_itinerary(std::istream& in) {
  Itinerary out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string op, arg, extra;
    words >> op >> arg >> extra;
    if (!extra.empty()) throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing tokens");
    if (op == "EAT" && arg.empty()) {
      out.push_back(Event::eat());
    } else if (op == "MOVE" && !arg.empty()) {
      Rational delta;
      try {
        delta = Rational::parse(arg);
      } catch (const std::exception& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
      }
      out.push_back(Event::move(delta));
    } else if (op == "PICKUP" && !arg.empty()) {
      out.push_back(Event::pickup(parse_count(arg, line_no)));
    } else if (op == "DROP" && !arg.empty()) {
      out.push_back(Event::drop(parse_count(arg, line_no)));
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unrecognised event '" + line + "'");
    }
  }
  return out;
}

Itinerary parse_itinerary(const std::string& text) {
  std::istringstream in(text);
  return parse_itinerary(in);
}

std::string format_event(const Event& e) {
  switch (e.kind) {
    case Event::Kind::Move: return "MOVE " + e.delta.str();
    case Event::Kind::Eat: return "EAT";
    case Event::Kind::Pickup: return "PICKUP " + std::to_string(e.count);
    case Event::Kind::Drop: return "DROP " + std::to_string(e.count);
  }
  return {};
}

std::string format_itinerary(const Itinerary& itinerary) {
  std::string out;
  for (const auto& e : itinerary) {
    out += format_event(e);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const WorldState& state) {
  nlohmann::json caches = nlohmann::json::array();
  for (const auto& [pos, count] : state.caches) caches.push_back({{"position", pos.str()}, {"count", count}});
  return {{"camel_pos", state.camel_pos.str()},
          {"stomach", state.stomach.str()},
          {"load", state.load},
          {"caches", caches}};
}

nlohmann::json to_json(const SimReport& report) {
  return {{"farthest", report.farthest.str()},
          {"returned", report.returned},
          {"success", report.success},
          {"bananas_eaten", report.bananas_eaten},
          {"counted_consumption", report.counted_consumption.str()},
          {"distance_walked", report.distance_walked.str()},
          {"final_state", to_json(report.final_state)}};
}

nlohmann::json to_json(const PotentialTrace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : trace.checkpoints) out.push_back({{"position", c.position.str()}, {"value", c.value.str()}});
  return out;
}

}  // namespace dromedary
