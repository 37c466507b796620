#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "egoarena/llm/chat.hpp"

namespace egoarena {

inline constexpr int kSessionLogSchemaVersion = 1;

// One prediction of the opponent's next action. Numeric for G0.8A; Hold'em
// predictions are stored as action codes (Fold=0 .. Raise=3).
struct BeliefRecord {
  int round = 1;
  std::optional<double> predicted;  // missing counts as wrong
  double actual = 0;
};

struct TurnRecord {
  int round = 1;
  std::string actor;
  std::vector<llm::ChatMessage> prompt;  // empty for structured (human) actions
  std::string raw_response;
  std::string parsed_action;
  std::optional<BeliefRecord> belief;
  std::string state_before;  // engine digest
  std::string state_after;
  std::vector<std::string> notes;  // parse failures, substitutions, provider errors
  std::vector<llm::Exchange> exchanges;
  nlohmann::json extra = nlohmann::json::object();  // scenario-specific fields
};

// Line-delimited log: a header line, one line per turn, then a result
// trailer. Field names are stable within a schema version.
//
//   {"type":"header","schema_version":1,"session_id":..,"scenario":..,
//    "agents":[..],"seed":..,"config":{..},"started_at":..}
//   {"type":"turn","round":..,"actor":..,"prompt":[..],"raw_response":..,
//    "parsed_action":..,"belief":{..}|null,"state_before":..,"state_after":..,
//    "notes":[..],"exchanges":[..],"extra":{..}}
//   {"type":"result","payload":{..},"finished_at":..}
struct SessionLog {
  std::string session_id;
  std::string scenario;  // mcq, guess, holdem, blackjack, bomb, dialogue
  std::vector<nlohmann::json> agents;  // AgentSpec::to_json(), or {"name":"human"}
  std::uint64_t seed = 0;
  nlohmann::json config = nlohmann::json::object();
  std::string started_at;
  std::vector<TurnRecord> turns;
  std::optional<nlohmann::json> result;
  std::string finished_at;

  std::vector<BeliefRecord> beliefs() const;
};

nlohmann::json to_json(const BeliefRecord& b);
BeliefRecord belief_record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TurnRecord& t);
TurnRecord turn_record_from_json(const nlohmann::json& j);

nlohmann::json header_json(const SessionLog& log);
nlohmann::json trailer_json(const SessionLog& log);

std::string to_jsonl(const SessionLog& log);
SessionLog session_log_from_jsonl(const std::string& text);

void write_session_log(const SessionLog& log, const std::filesystem::path& path);
SessionLog read_session_log(const std::filesystem::path& path);

// Timestamp source. Stub runs use the logical clock so repeated runs produce
// identical files: it yields "logical:0", "logical:1", ...
class Clock {
 public:
  static Clock wall();
  static Clock logical();
  std::string now();

 private:
  explicit Clock(bool logical) : logical_(logical) {}
  bool logical_;
  std::uint64_t tick_ = 0;
};

}  // namespace egoarena
