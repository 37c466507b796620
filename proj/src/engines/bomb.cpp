#include "egoarena/engines/bomb.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "egoarena/core/error.hpp"

namespace egoarena {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n.!");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n.!");
  return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& i : items) {
    if (!out.empty()) out += sep;
    out += i;
  }
  return out;
}

}  // namespace

bool BombAgent::holds(const std::string& color) const {
  return std::find(cutters.begin(), cutters.end(), color) != cutters.end();
}

bool BombMap::finished() const { return round > max_rounds; }

bool BombMap::adjacent(int a, int b) const {
  for (const auto& [x, y] : edges)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

std::optional<int> BombMap::room_index(const std::string& name) const {
  const auto key = lower(name);
  for (std::size_t i = 0; i < rooms.size(); ++i)
    if (lower(rooms[i]) == key) return static_cast<int>(i);
  return std::nullopt;
}

std::string BombMap::serialize() const {
  std::ostringstream out;
  out << "map=" << name << ";round=" << round << ";score=" << score << ";bombs=";
  for (const auto& b : bombs) out << b.id << "@" << b.room << ":" << b.phases_cut << "/" << b.sequence.size() << ",";
  out << ";agents=";
  for (const auto& a : agents) out << a.name << "@" << a.position << ",";
  return out.str();
}

std::string to_string(const BombAction& a, const BombMap& map) {
  switch (a.kind) {
    case BombAction::Kind::Wait: return "wait";
    case BombAction::Kind::Move:
      return "move " + (a.room >= 0 && a.room < static_cast<int>(map.rooms.size()) ? map.rooms[a.room] : "?");
    case BombAction::Kind::Cut: return "cut " + a.color;
  }
  return "wait";
}

ParsedBombAction parse_bomb_action(const std::string& text, const BombMap& map) {
  const std::string t = trim(text);
  std::istringstream in(t);
  std::string verb;
  in >> verb;
  verb = lower(verb);
  std::string arg;
  std::getline(in, arg);
  arg = trim(arg);
  if (verb == "wait" && arg.empty()) return {BombAction::wait(), std::nullopt};
  if (verb == "move" && !arg.empty()) {
    if (auto room = map.room_index(arg)) return {BombAction::move(*room), std::nullopt};
    return {BombAction::wait(), "unknown room '" + arg + "'; treated as wait"};
  }
  if (verb == "cut" && !arg.empty() && arg.find(' ') == std::string::npos) return {BombAction::cut(lower(arg)), std::nullopt};
  return {BombAction::wait(), "malformed action '" + t + "'; treated as wait"};
}

BombStepResult bomb_step(const BombMap& map, const std::array<BombAction, kBombTeamSize>& actions) {
  if (map.finished()) throw RuleViolation("bomb mission already finished after round " + std::to_string(map.max_rounds));
  BombStepResult result{map, 0, {}};
  BombMap& next = result.state;

  std::vector<bool> advanced(map.bombs.size(), false);
  for (int i = 0; i < kBombTeamSize; ++i) {
    const auto& act = actions[i];
    if (act.kind != BombAction::Kind::Cut) continue;
    const BombAgent& agent = map.agents[i];
    if (!agent.holds(act.color)) {
      result.notes.push_back(agent.name + " has no " + act.color + " cutter");
      continue;
    }
    bool hit = false;
    for (std::size_t b = 0; b < map.bombs.size(); ++b) {
      const Bomb& bomb = map.bombs[b];
      if (bomb.room != agent.position || bomb.defused()) continue;
      if (bomb.sequence[bomb.phases_cut] != act.color) continue;
      hit = true;
      if (!advanced[b]) {
        advanced[b] = true;
        ++next.bombs[b].phases_cut;
        result.points += kPointsPerPhase;
      }
      break;
    }
    if (!hit) result.notes.push_back(agent.name + " cut " + act.color + " with no matching phase");
  }

  for (int i = 0; i < kBombTeamSize; ++i) {
    const auto& act = actions[i];
    if (act.kind != BombAction::Kind::Move) continue;
    const int from = map.agents[i].position;
    if (act.room == from) continue;
    if (act.room < 0 || act.room >= static_cast<int>(map.rooms.size()) || !map.adjacent(from, act.room)) {
      result.notes.push_back(map.agents[i].name + " cannot move to " + to_string(act, map) + "; treated as wait");
      continue;
    }
    next.agents[i].position = act.room;
  }

  next.score += result.points;
  ++next.round;
  return result;
}

int bomb_max_score(const BombMap& map) {
  int phases = 0;
  for (const auto& b : map.bombs) phases += static_cast<int>(b.sequence.size());
  return kPointsPerPhase * phases;
}

std::string bomb_observation(const BombMap& map, int agent_index) {
  const BombAgent& me = map.agents.at(agent_index);
  std::ostringstream out;
  out << "Round " << map.round << " of " << map.max_rounds << ". Team score: " << map.score << ".\n";
  out << "You are " << me.name << " in " << map.rooms[me.position] << ".\n";
  std::vector<std::string> exits;
  for (std::size_t r = 0; r < map.rooms.size(); ++r)
    if (map.adjacent(me.position, static_cast<int>(r))) exits.push_back(map.rooms[r]);
  out << "Connected rooms: " << (exits.empty() ? "none" : join(exits, ", ")) << ".\n";
  bool any_bomb = false;
  for (const auto& b : map.bombs) {
    if (b.room != me.position) continue;
    any_bomb = true;
    if (b.defused()) {
      out << "Bomb " << b.id << " is fully defused.\n";
      continue;
    }
    std::vector<std::string> remaining(b.sequence.begin() + b.phases_cut, b.sequence.end());
    out << "Bomb " << b.id << " has " << remaining.size() << " phase(s) left, in order: " << join(remaining, ", ")
        << ".\n";
  }
  if (!any_bomb) out << "There is no bomb here.\n";
  std::vector<std::string> mates;
  for (int i = 0; i < kBombTeamSize; ++i)
    if (i != agent_index && map.agents[i].position == me.position) mates.push_back(map.agents[i].name);
  out << "Teammates here: " << (mates.empty() ? "none" : join(mates, ", ")) << ".\n";
  out << "Your cutters: " << join(me.cutters, ", ") << ".\n";
  return out.str();
}

void validate_bomb_map(const BombMap& map) {
  const int n = static_cast<int>(map.rooms.size());
  if (n == 0) throw ConfigError("bomb map has no rooms");
  for (const auto& [a, b] : map.edges)
    if (a < 0 || a >= n || b < 0 || b >= n) throw ConfigError("bomb map edge out of range");
  for (const auto& b : map.bombs) {
    if (b.room < 0 || b.room >= n) throw ConfigError("bomb " + b.id + " placed in unknown room");
    if (b.sequence.empty()) throw ConfigError("bomb " + b.id + " has no phases");
    if (b.phases_cut < 0 || b.phases_cut > static_cast<int>(b.sequence.size()))
      throw ConfigError("bomb " + b.id + " has an invalid phase counter");
  }
  for (const auto& a : map.agents)
    if (a.position < 0 || a.position >= n) throw ConfigError("agent " + a.name + " starts in unknown room");
  if (map.max_rounds < 1) throw ConfigError("bomb map needs at least one round");
}

}  // namespace egoarena
