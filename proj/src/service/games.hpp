#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "egoarena/harness/session_log.hpp"
#include "egoarena/llm/chat.hpp"

namespace egoarena::service {

struct Slot {
  std::string name;
  std::string type;  // human | agent | policy
  std::shared_ptr<llm::ChatClient> client;  // agent
  std::string policy;                       // policy

  bool automated() const { return type != "human"; }
  nlohmann::json describe() const;
};

using EventList = std::vector<std::pair<std::string, nlohmann::json>>;

// Per-scenario state machine behind a service session. Slot i of a two-seat
// game is seat i.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::string scenario() const = 0;
  virtual nlohmann::json config() const = 0;
  // What handles and events show; config() goes to the run log.
  virtual nlohmann::json public_config() const { return config(); }
  virtual std::optional<int> to_act() const = 0;
  virtual bool finished() const = 0;
  // nullopt = spectator.
  virtual nlohmann::json view(std::optional<int> slot) const = 0;
  // Validates and applies a structured action; throws ServiceError (409 out
  // of turn, 422 illegal). `pre` carries the prompt/response of automated
  // turns and is merged into the appended record.
  virtual EventList apply(int slot, const nlohmann::json& action, bool automated, const TurnRecord& pre) = 0;
  // Structured action for an agent or policy slot; fills prompt, raw response,
  // exchanges and notes into `pre`.
  virtual nlohmann::json automated_action(int slot, TurnRecord& pre) = 0;
  virtual nlohmann::json result() const = 0;
  virtual EventList opening_events() const { return {}; }

  std::vector<Slot> slots;
  std::vector<TurnRecord> turns;
};

// Validates the request (throws ServiceError 400 with per-field messages).
std::unique_ptr<Game> make_game(const nlohmann::json& request, std::uint64_t seed);

}  // namespace egoarena::service
