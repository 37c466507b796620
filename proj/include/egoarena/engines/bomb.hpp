#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egoarena {

// Cooperative bomb defusal for a team of three.
//
// Rooms form an undirected graph. Each bomb sits in a room and carries an
// ordered sequence of phase colors; a phase is processed when a co-located
// agent holding a cutter of that color cuts it while it is the next uncut
// phase. Every processed phase scores 10 points.
//
// A joint step is simultaneous: all cuts are judged against the bomb states
// and agent positions at the start of the round, so a bomb advances at most
// one phase per round; moves take effect afterwards.
//
// Action grammar (case-insensitive):  move <room> | cut <color> | wait

inline constexpr int kBombTeamSize = 3;
inline constexpr int kPointsPerPhase = 10;

struct Bomb {
  std::string id;
  int room = 0;
  std::vector<std::string> sequence;
  int phases_cut = 0;

  bool defused() const { return phases_cut >= static_cast<int>(sequence.size()); }
};

struct BombAgent {
  std::string name;
  int position = 0;
  std::vector<std::string> cutters;

  bool holds(const std::string& color) const;
};

struct BombMap {
  std::string name;
  std::vector<std::string> rooms;
  std::vector<std::pair<int, int>> edges;
  std::vector<Bomb> bombs;
  std::array<BombAgent, kBombTeamSize> agents;
  int round = 1;  // the round about to be played
  int max_rounds = 10;
  int score = 0;

  bool finished() const;
  bool adjacent(int a, int b) const;
  std::optional<int> room_index(const std::string& name) const;
  std::string serialize() const;
};

struct BombAction {
  enum class Kind { Wait, Move, Cut };
  Kind kind = Kind::Wait;
  int room = -1;      // Move
  std::string color;  // Cut

  static BombAction wait() { return {}; }
  static BombAction move(int room) { return {Kind::Move, room, {}}; }
  static BombAction cut(std::string color) { return {Kind::Cut, -1, std::move(color)}; }
};

std::string to_string(const BombAction& a, const BombMap& map);

struct ParsedBombAction {
  BombAction action;
  std::optional<std::string> warning;  // set when the text degraded to wait
};

// Parses one action in the grammar above. Unknown verbs, unknown rooms and
// missing arguments degrade to wait with a warning.
ParsedBombAction parse_bomb_action(const std::string& text, const BombMap& map);

struct BombStepResult {
  BombMap state;
  int points = 0;
  std::vector<std::string> notes;  // degraded actions and failed cuts
};

// Throws RuleViolation after the final round. Moves along a missing edge are
// treated as wait and noted.
BombStepResult bomb_step(const BombMap& map, const std::array<BombAction, kBombTeamSize>& actions);

// 10 x total phases across all bombs.
int bomb_max_score(const BombMap& map);

// Text an agent sees at the start of a round: its room, exits, bombs in the
// room with their remaining phases, teammates present and its own cutters.
std::string bomb_observation(const BombMap& map, int agent);

// Checks structural validity (3 agents, rooms in range, nonempty sequences).
void validate_bomb_map(const BombMap& map);

}  // namespace egoarena
