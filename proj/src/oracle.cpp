#include "dromedary/oracle.hpp"

#include <deque>
#include <unordered_map>

namespace dromedary {

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("oracle state budget of " + std::to_string(budget) + " states exceeded"), budget_(budget) {}

namespace {

int grid_index(const Rational& value, int q, const char* what) {
  const Rational scaled = value * q;
  if (!scaled.is_integer() || scaled < 0 || scaled > 255)
    throw DomainError(std::string(what) + " " + value.str() + " is not on the 1/" + std::to_string(q) + " grid");
  return static_cast<int>(scaled.num());
}

// Layout of the packed state used during the search.
enum : std::size_t { kPos = 0, kStomach = 1, kLoad = 2, kCaches = 3 };

enum class Step : std::uint8_t { Forward, Back, Eat, Pickup, Drop };

struct Node {
  std::string state;
  std::uint8_t farthest;
  std::int64_t parent;
  Step step;
};

Itinerary rebuild(const std::vector<Node>& nodes, std::int64_t leaf, int q) {
  std::vector<Step> steps;
  for (std::int64_t i = leaf; nodes[i].parent >= 0; i = nodes[i].parent) steps.push_back(nodes[i].step);
  Itinerary out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const Step s = *it;
    if (s == Step::Forward || s == Step::Back) {
      const Rational d = rational(s == Step::Forward ? 1 : -1, q);
      if (!out.empty() && out.back().kind == Event::Kind::Move && out.back().delta.sign() == d.sign()) {
        out.back().delta += d;
      } else {
        out.push_back(Event::move(d));
      }
    } else if (s == Step::Eat) {
      out.push_back(Event::eat());
    } else {
      const bool up = s == Step::Pickup;
      const auto kind = up ? Event::Kind::Pickup : Event::Kind::Drop;
      if (!out.empty() && out.back().kind == kind) {
        ++out.back().count;
      } else {
        out.push_back(up ? Event::pickup(1) : Event::drop(1));
      }
    }
  }
  return out;
}

}  // namespace

std::string canonical_key(const WorldState& state, const Rational& farthest, int q) {
  if (q < 1) throw DomainError("grid denominator must be positive");
  std::string key;
  key.push_back(static_cast<char>(grid_index(state.camel_pos, q, "camel position")));
  key.push_back(static_cast<char>(grid_index(state.stomach, q, "stomach")));
  key.push_back(static_cast<char>(grid_index(farthest, q, "farthest")));
  key.push_back(static_cast<char>(state.load));
  for (const auto& [pos, count] : state.caches) {
    const int idx = grid_index(pos, q, "cache position");
    if (key.size() < kCaches + 1 + static_cast<std::size_t>(idx) + 1) key.resize(kCaches + 1 + idx + 1, '\0');
    key[kCaches + 1 + idx] = static_cast<char>(count);
  }
  return key;
}

SearchResult optimal(const ProblemSpec& spec, const GridConfig& grid, std::uint64_t state_budget) {
  spec.validate();
  if (spec.variant == Variant::Delivery) throw DomainError("the oracle searches one-way and round-trip variants only");
  if (grid.q < 1) throw DomainError("grid denominator must be positive");
  const int q = grid.q;
  const Rational horizon = grid.max_position.value_or(spec.bananas);
  if (horizon <= 0 || horizon > spec.bananas) throw DomainError("max_position must lie in (0, N]");
  if (spec.bananas.floor() > 5) throw DomainError("the oracle handles at most 5 whole bananas");
  if (horizon * q > 24) throw DomainError("q * max_position must not exceed 24");
  const int top = static_cast<int>((horizon * q).floor());
  const int full = spec.stomach_capacity * q;
  const int eat_limit = (spec.stomach_capacity - 1) * q;
  const bool round_trip = spec.variant == Variant::RoundTrip;

  const WorldState start = initial_state(spec);
  std::string root(kCaches + top + 1, '\0');
  root[kStomach] = static_cast<char>(grid_index(start.stomach, q, "initial stomach"));
  root[kCaches] = static_cast<char>(start.cached_at(0));

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::uint8_t> best_farthest;
  std::deque<std::int64_t> queue;
  nodes.push_back({root, 0, -1, Step::Eat});
  best_farthest.emplace(root, 0);
  queue.push_back(0);

  SearchResult result;
  std::int64_t best_node = 0;
  int best = 0;

  auto fuel_left = [&](const std::string& s) {
    int total = static_cast<unsigned char>(s[kLoad]);
    for (std::size_t i = kCaches; i < s.size(); ++i) total += static_cast<unsigned char>(s[i]);
    return total * q + static_cast<unsigned char>(s[kStomach]);
  };

  while (!queue.empty()) {
    const std::int64_t id = queue.front();
    queue.pop_front();
    const std::string state = nodes[id].state;
    const int far = nodes[id].farthest;
    if (best_farthest.at(state) != far) continue;  // superseded
    if (++result.states_explored > state_budget) throw BudgetExceeded(state_budget);

    const int pos = static_cast<unsigned char>(state[kPos]);
    const int stomach = static_cast<unsigned char>(state[kStomach]);
    const int load = static_cast<unsigned char>(state[kLoad]);
    const int cached = static_cast<unsigned char>(state[kCaches + pos]);

    if ((!round_trip || pos == 0) && far > best) {
      best = far;
      best_node = id;
    }

    auto push = [&](std::string next, int next_far, Step step) {
      // a round trip must still be able to walk home
      if (round_trip && fuel_left(next) < static_cast<unsigned char>(next[kPos])) return;
      auto [it, fresh] = best_farthest.try_emplace(next, static_cast<std::uint8_t>(next_far));
      if (!fresh) {
        if (it->second >= next_far) return;
        it->second = static_cast<std::uint8_t>(next_far);
      }
      nodes.push_back({std::move(next), static_cast<std::uint8_t>(next_far), id, step});
      queue.push_back(static_cast<std::int64_t>(nodes.size()) - 1);
    };

    if (stomach >= 1) {
      if (pos < top) {
        std::string next = state;
        next[kPos] = static_cast<char>(pos + 1);
        next[kStomach] = static_cast<char>(stomach - 1);
        push(std::move(next), std::max(far, pos + 1), Step::Forward);
      }
      if (pos > 0) {
        std::string next = state;
        next[kPos] = static_cast<char>(pos - 1);
        next[kStomach] = static_cast<char>(stomach - 1);
        push(std::move(next), far, Step::Back);
      }
    }
    if (stomach <= eat_limit && (cached > 0 || load > 0)) {
      std::string next = state;
      next[kStomach] = static_cast<char>(std::min(stomach + q, full));
      if (cached > 0) {
        next[kCaches + pos] = static_cast<char>(cached - 1);
      } else {
        next[kLoad] = static_cast<char>(load - 1);
      }
      push(std::move(next), far, Step::Eat);
    }
    if (cached > 0 && load < spec.back_capacity) {
      std::string next = state;
      next[kCaches + pos] = static_cast<char>(cached - 1);
      next[kLoad] = static_cast<char>(load + 1);
      push(std::move(next), far, Step::Pickup);
    }
    if (load > 0) {
      std::string next = state;
      next[kCaches + pos] = static_cast<char>(cached + 1);
      next[kLoad] = static_cast<char>(load - 1);
      push(std::move(next), far, Step::Drop);
    }
  }

  result.best_distance = rational(best, q);
  result.witness = rebuild(nodes, best_node, q);
  return result;
}

}  // namespace dromedary
