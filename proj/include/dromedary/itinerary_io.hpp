#pragma once

#include "dromedary/desert_sim.hpp"

#include <json.hpp>

#include <istream>
#include <string>

namespace dromedary {

/// Line-oriented itinerary text: `MOVE <rational>`, `EAT`, `PICKUP <int>`,
/// `DROP <int>`. Blank lines and `#` comments are ignored.
Itinerary parse_itinerary(std::istream& in);
Itinerary parse_itinerary(const std::string& text);
std::string format_event(const Event& e);
std::string format_itinerary(const Itinerary& itinerary);

nlohmann::json to_json(const WorldState& state);
nlohmann::json to_json(const SimReport& report);
nlohmann::json to_json(const PotentialTrace& trace);

}  // namespace dromedary
