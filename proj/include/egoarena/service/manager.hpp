#pragma once

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "egoarena/core/error.hpp"

namespace egoarena::service {

inline constexpr int kApiSchemaVersion = 1;

// Carries an HTTP status and a structured body ({"error": ..., ...}).
class ServiceError : public Error {
 public:
  ServiceError(int status, const std::string& message, nlohmann::json details = nlohmann::json::object());
  int status() const { return status_; }
  const nlohmann::json& body() const { return body_; }

 private:
  int status_;
  nlohmann::json body_;
};

struct Event {
  long seq = 0;  // 1, 2, 3, ... per session
  std::string type;
  nlohmann::json data;
};

enum class SessionStatus { Waiting, Active, Finished };
std::string to_string(SessionStatus s);

class Game;

// Owns all sessions. Every session is persisted as an append-only file
// sessions/<id>.jsonl (a "create" line, then one "action" line per turn) and
// listed in index.jsonl; on construction the manager replays them, so a
// restart restores every session, its events and its result. Finished
// sessions also get a harness-format session log in runs/<id>.jsonl.
//
// Create requests:
//   {"scenario": "guess", "config": {"level": 2, "rounds": 10},
//    "participants": [{"name": "p1", "type": "human"}], "seed": 7}
//   scenario  guess | blackjack | holdem | dialogue
//   config    guess: level, rounds; blackjack: n_hands;
//             holdem: n_hands, mirrored; dialogue: the scenario record
//   participants  one (guess, blackjack) or two (holdem, dialogue) slots:
//             {"name", "type": "human"}
//             {"name", "type": "agent", "spec": {agent config keys}}
//             {"name", "type": "policy", "policy": "random" | "calling-station"}  (holdem only)
//   seed      optional; generated when absent
//
// Agent and policy turns run synchronously whenever a session advances.
class SessionManager {
 public:
  explicit SessionManager(std::filesystem::path data_dir);
  ~SessionManager();

  nlohmann::json create(const nlohmann::json& request);
  // Participant view; "spectator" sees only public information.
  nlohmann::json state(const std::string& id, const std::string& participant);
  nlohmann::json submit(const std::string& id, const std::string& participant, const nlohmann::json& action);
  nlohmann::json handle(const std::string& id);
  nlohmann::json list();

  // Events with seq > after. Blocks up to `wait_ms` when there are none yet and
  // the session is still running.
  std::vector<Event> events(const std::string& id, long after, int wait_ms = 0);
  bool finished(const std::string& id);

  // MetricReports over runs/, one per model name.
  nlohmann::json reports();

  const std::filesystem::path& data_dir() const { return dir_; }

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id);
  void advance(Session& s, bool persist);
  void apply(Session& s, const std::string& participant, const nlohmann::json& action, bool persist,
             const nlohmann::json* record);
  void emit(Session& s, const std::string& type, nlohmann::json data);
  void append_line(const std::filesystem::path& path, const nlohmann::json& line);
  void write_run_log(Session& s);
  std::shared_ptr<Session> build(const std::string& id, const nlohmann::json& request);
  void restore();

  std::filesystem::path dir_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 id_rng_;
  std::mutex file_mu_;
};

}  // namespace egoarena::service
