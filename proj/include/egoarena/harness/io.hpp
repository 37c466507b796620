#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "egoarena/engines/bomb.hpp"
#include "egoarena/harness/types.hpp"

namespace egoarena {

// ScenarioItem files: UTF-8, one JSON record per line; blank lines and lines
// starting with '#' are skipped.
std::vector<ScenarioItem> load_items(const std::filesystem::path& path);
std::vector<ScenarioItem> parse_items(const std::string& text);

// Bomb map files (JSON). Rooms and positions are referenced by room name:
//
//   {"name": "map1", "max_rounds": 10,
//    "rooms": ["hall", "lab"],
//    "edges": [["hall", "lab"]],
//    "bombs": [{"id": "B1", "room": "lab", "sequence": ["red", "blue"]}],
//    "agents": [{"name": "Alpha", "start": "hall", "cutters": ["red"]}, ...3]}
BombMap bomb_map_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BombMap& map);
BombMap load_bomb_map(const std::filesystem::path& path);

// Dialogue scenario files: a JSON array of scenarios, or one per line.
std::vector<DialogueScenario> load_dialogue_scenarios(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace egoarena
