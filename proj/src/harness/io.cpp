#include "egoarena/harness/io.hpp"

#include <fstream>
#include <sstream>

#include "egoarena/core/error.hpp"

namespace egoarena {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::vector<ScenarioItem> parse_items(const std::string& text) {
  std::vector<ScenarioItem> items;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    try {
      items.push_back(scenario_item_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ConfigError("item line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("item line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return items;
}

std::vector<ScenarioItem> load_items(const std::filesystem::path& path) { return parse_items(read_text_file(path)); }

BombMap bomb_map_from_json(const json& j) {
  BombMap map;
  try {
    map.name = j.value("name", "map");
    map.max_rounds = j.value("max_rounds", 10);
    map.rooms = j.at("rooms").get<std::vector<std::string>>();
    auto room = [&](const json& name) {
      const auto idx = map.room_index(name.get<std::string>());
      if (!idx) throw ConfigError("bomb map " + map.name + ": unknown room '" + name.get<std::string>() + "'");
      return *idx;
    };
    for (const auto& e : j.at("edges")) map.edges.emplace_back(room(e.at(0)), room(e.at(1)));
    for (const auto& b : j.at("bombs"))
      map.bombs.push_back({b.at("id").get<std::string>(), room(b.at("room")),
                           b.at("sequence").get<std::vector<std::string>>(), 0});
    const auto& agents = j.at("agents");
    if (agents.size() != kBombTeamSize) throw ConfigError("bomb map " + map.name + ": needs exactly 3 agents");
    for (std::size_t i = 0; i < agents.size(); ++i)
      map.agents[i] = {agents[i].at("name").get<std::string>(), room(agents[i].at("start")),
                       agents[i].at("cutters").get<std::vector<std::string>>()};
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad bomb map: ") + e.what());
  }
  validate_bomb_map(map);
  return map;
}

json to_json(const BombMap& map) {
  json edges = json::array();
  for (const auto& [a, b] : map.edges) edges.push_back({map.rooms[a], map.rooms[b]});
  json bombs = json::array();
  for (const auto& b : map.bombs) bombs.push_back({{"id", b.id}, {"room", map.rooms[b.room]}, {"sequence", b.sequence}});
  json agents = json::array();
  for (const auto& a : map.agents)
    agents.push_back({{"name", a.name}, {"start", map.rooms[a.position]}, {"cutters", a.cutters}});
  return {{"name", map.name}, {"max_rounds", map.max_rounds}, {"rooms", map.rooms},
          {"edges", edges},   {"bombs", bombs},                {"agents", agents}};
}

BombMap load_bomb_map(const std::filesystem::path& path) {
  try {
    return bomb_map_from_json(json::parse(read_text_file(path)));
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<DialogueScenario> load_dialogue_scenarios(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::vector<DialogueScenario> out;
  try {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      for (const auto& j : json::parse(text)) out.push_back(dialogue_scenario_from_json(j));
    } else {
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#')
          out.push_back(dialogue_scenario_from_json(json::parse(line)));
    }
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return out;
}

}  // namespace egoarena
