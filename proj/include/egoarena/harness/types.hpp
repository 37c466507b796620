#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace egoarena {

enum class Pillar { Cognitive, Situational };
enum class ScenarioKind { StaticCognition, RealWorld, Counterfactual, ParallelWorld };

std::string to_string(Pillar p);
std::string to_string(ScenarioKind s);
Pillar pillar_from_string(const std::string& s);
ScenarioKind scenario_kind_from_string(const std::string& s);

// One first-person multiple-choice entry.
struct ScenarioItem {
  std::string id;
  Pillar pillar = Pillar::Cognitive;
  ScenarioKind scenario = ScenarioKind::StaticCognition;
  std::string system_message;
  std::string story;
  std::string question;
  std::vector<std::string> options;
  int answer_index = 0;

  // Throws ConfigError when answer_index is out of range or the system
  // message is missing.
  void validate() const;
};

nlohmann::json to_json(const ScenarioItem& item);
ScenarioItem scenario_item_from_json(const nlohmann::json& j);

struct Character {
  std::string name;
  std::string profile;
  std::string goal;  // private social goal
};

struct DialogueScenario {
  std::string id;
  std::string setting;
  std::array<Character, 2> characters;
  int max_turns = 20;

  void validate() const;
};

nlohmann::json to_json(const DialogueScenario& s);
DialogueScenario dialogue_scenario_from_json(const nlohmann::json& j);

struct DialogueTurn {
  int turn = 1;
  int speaker = 0;  // index into DialogueScenario::characters
  std::string name;
  std::string text;
};

// Transcript schema shared by agent-agent and human-agent dialogues.
struct Transcript {
  std::string scenario_id;
  std::array<std::string, 2> participants;  // agent names, or "human"
  std::vector<DialogueTurn> turns;
  std::string end_reason;  // "max_turns", "both_left" or "provider_error"
};

nlohmann::json to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);

}  // namespace egoarena
