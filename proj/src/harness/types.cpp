#include "egoarena/harness/types.hpp"

#include "egoarena/core/error.hpp"

namespace egoarena {

using nlohmann::json;

std::string to_string(Pillar p) { return p == Pillar::Cognitive ? "cognitive" : "situational"; }

std::string to_string(ScenarioKind s) {
  switch (s) {
    case ScenarioKind::StaticCognition: return "static_cognition";
    case ScenarioKind::RealWorld: return "real_world";
    case ScenarioKind::Counterfactual: return "counterfactual";
    case ScenarioKind::ParallelWorld: return "parallel_world";
  }
  return "?";
}

Pillar pillar_from_string(const std::string& s) {
  if (s == "cognitive") return Pillar::Cognitive;
  if (s == "situational") return Pillar::Situational;
  throw ConfigError("unknown pillar '" + s + "'");
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
  if (s == "static_cognition") return ScenarioKind::StaticCognition;
  if (s == "real_world") return ScenarioKind::RealWorld;
  if (s == "counterfactual") return ScenarioKind::Counterfactual;
  if (s == "parallel_world") return ScenarioKind::ParallelWorld;
  throw ConfigError("unknown scenario '" + s + "'");
}

void ScenarioItem::validate() const {
  if (system_message.empty()) throw ConfigError("item " + id + ": system_message is required");
  if (options.size() < 2) throw ConfigError("item " + id + ": needs at least two options");
  if (answer_index < 0 || answer_index >= static_cast<int>(options.size()))
    throw ConfigError("item " + id + ": answer_index out of range");
}

json to_json(const ScenarioItem& item) {
  return {{"id", item.id},
          {"pillar", to_string(item.pillar)},
          {"scenario", to_string(item.scenario)},
          {"system_message", item.system_message},
          {"story", item.story},
          {"question", item.question},
          {"options", item.options},
          {"answer_index", item.answer_index}};
}

ScenarioItem scenario_item_from_json(const json& j) {
  ScenarioItem item;
  try {
    item.id = j.at("id").get<std::string>();
    item.pillar = pillar_from_string(j.at("pillar").get<std::string>());
    item.scenario = scenario_kind_from_string(j.at("scenario").get<std::string>());
    item.system_message = j.at("system_message").get<std::string>();
    item.story = j.at("story").get<std::string>();
    item.question = j.at("question").get<std::string>();
    item.options = j.at("options").get<std::vector<std::string>>();
    item.answer_index = j.at("answer_index").get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad scenario item: ") + e.what());
  }
  item.validate();
  return item;
}

void DialogueScenario::validate() const {
  if (max_turns < 2) throw ConfigError("dialogue " + id + ": max_turns must be >= 2");
  for (const auto& c : characters) {
    if (c.name.empty()) throw ConfigError("dialogue " + id + ": character name missing");
    if (c.goal.empty()) throw ConfigError("dialogue " + id + ": goal for " + c.name + " missing");
  }
}

json to_json(const DialogueScenario& s) {
  json chars = json::array();
  for (const auto& c : s.characters) chars.push_back({{"name", c.name}, {"profile", c.profile}, {"goal", c.goal}});
  return {{"id", s.id}, {"setting", s.setting}, {"characters", chars}, {"max_turns", s.max_turns}};
}

DialogueScenario dialogue_scenario_from_json(const json& j) {
  DialogueScenario s;
  try {
    s.id = j.at("id").get<std::string>();
    s.setting = j.at("setting").get<std::string>();
    const auto& chars = j.at("characters");
    if (chars.size() != 2) throw ConfigError("dialogue " + s.id + ": exactly two characters required");
    for (std::size_t i = 0; i < 2; ++i) {
      s.characters[i].name = chars[i].at("name").get<std::string>();
      s.characters[i].profile = chars[i].value("profile", std::string());
      s.characters[i].goal = chars[i].at("goal").get<std::string>();
    }
    s.max_turns = j.value("max_turns", 20);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad dialogue scenario: ") + e.what());
  }
  s.validate();
  return s;
}

json to_json(const Transcript& t) {
  json turns = json::array();
  for (const auto& turn : t.turns)
    turns.push_back({{"turn", turn.turn}, {"speaker", turn.speaker}, {"name", turn.name}, {"text", turn.text}});
  return {{"scenario_id", t.scenario_id},
          {"participants", t.participants},
          {"turns", turns},
          {"end_reason", t.end_reason}};
}

Transcript transcript_from_json(const json& j) {
  Transcript t;
  try {
    t.scenario_id = j.at("scenario_id").get<std::string>();
    t.participants = j.at("participants").get<std::array<std::string, 2>>();
    for (const auto& turn : j.at("turns"))
      t.turns.push_back({turn.at("turn").get<int>(), turn.at("speaker").get<int>(), turn.at("name").get<std::string>(),
                         turn.at("text").get<std::string>()});
    t.end_reason = j.at("end_reason").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad transcript: ") + e.what());
  }
  return t;
}

}  // namespace egoarena
