#include "egoarena/service/manager.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "egoarena/harness/session_log.hpp"
#include "egoarena/metrics.hpp"
#include "games.hpp"

namespace egoarena::service {

namespace fs = std::filesystem;
using nlohmann::json;

ServiceError::ServiceError(int status, const std::string& message, json details)
    : Error(message), status_(status), body_(std::move(details)) {
  if (!body_.is_object()) body_ = json::object();
  body_["error"] = message;
}

std::string to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::Waiting: return "waiting";
    case SessionStatus::Active: return "active";
    case SessionStatus::Finished: return "finished";
  }
  return "?";
}

struct SessionManager::Session {
  std::string id;
  json request;
  std::uint64_t seed = 0;
  std::unique_ptr<Game> game;
  SessionStatus status = SessionStatus::Waiting;
  std::vector<Event> events;
  std::string created_at;
  std::string finished_at;
  std::mutex mu;
  std::condition_variable cv;

  std::optional<int> slot_of(const std::string& participant) const {
    for (std::size_t i = 0; i < game->slots.size(); ++i)
      if (game->slots[i].name == participant) return static_cast<int>(i);
    return std::nullopt;
  }
  fs::path file(const fs::path& dir) const { return dir / "sessions" / (id + ".jsonl"); }
};

namespace {

std::string now() { return Clock::wall().now(); }

json summary(const std::string& id, const Game& g, SessionStatus status, std::uint64_t seed) {
  json parts = json::array();
  for (const auto& s : g.slots) {
    json p = {{"name", s.name}, {"type", s.type}};
    if (s.type == "agent") p["agent"] = s.client->spec().name;
    if (s.type == "policy") p["policy"] = s.policy;
    parts.push_back(p);
  }
  const auto who = g.to_act();
  json h = {{"schema_version", kApiSchemaVersion},
            {"id", id},
            {"scenario", g.scenario()},
            {"status", to_string(status)},
            {"config", g.public_config()},
            {"seed", seed},
            {"participants", parts},
            {"to_act", who ? json(g.slots[*who].name) : json(nullptr)}};
  if (g.finished()) h["result"] = g.result();
  return h;
}

}  // namespace

SessionManager::SessionManager(fs::path data_dir) : dir_(std::move(data_dir)), id_rng_(std::random_device{}()) {
  fs::create_directories(dir_ / "sessions");
  fs::create_directories(dir_ / "runs");
  restore();
}

SessionManager::~SessionManager() = default;

std::shared_ptr<SessionManager::Session> SessionManager::build(const std::string& id, const json& request) {
  auto s = std::make_shared<Session>();
  s->id = id;
  s->request = request;
  s->seed = request.at("seed").get<std::uint64_t>();
  s->game = make_game(request, s->seed);
  return s;
}

json SessionManager::create(const json& request) {
  if (!request.is_object()) throw ServiceError(400, "request must be a JSON object");
  json req = request;
  std::string id;
  {
    std::lock_guard lock(mu_);
    if (!req.contains("seed")) req["seed"] = id_rng_() >> 11;
    do {
      std::ostringstream out;
      out << std::hex << (id_rng_() & 0xffffffffffffULL);
      id = "s" + out.str();
    } while (sessions_.count(id));
  }
  if (!req["seed"].is_number_unsigned() && !(req["seed"].is_number_integer() && req["seed"].get<long long>() >= 0))
    throw ServiceError(400, "invalid session request", {{"fields", {{"seed", "must be a non-negative integer"}}}});

  auto s = build(id, req);
  s->created_at = now();
  append_line(s->file(dir_), {{"type", "create"}, {"id", id}, {"request", req}, {"at", s->created_at}});
  append_line(dir_ / "index.jsonl", {{"id", id}, {"scenario", s->game->scenario()}, {"created_at", s->created_at}});
  {
    std::lock_guard lock(mu_);
    sessions_[id] = s;
  }
  std::lock_guard lock(s->mu);
  emit(*s, "created", summary(id, *s->game, s->status, s->seed));
  for (auto& [type, data] : s->game->opening_events()) emit(*s, type, data);
  advance(*s, true);
  return summary(id, *s->game, s->status, s->seed);
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "unknown session '" + id + "'");
  return it->second;
}

json SessionManager::handle(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  return summary(id, *s->game, s->status, s->seed);
}

json SessionManager::list() {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::lock_guard lock(mu_);
    for (auto& [id, s] : sessions_) all.push_back(s);
  }
  json out = json::array();
  for (auto& s : all) {
    std::lock_guard lock(s->mu);
    out.push_back(summary(s->id, *s->game, s->status, s->seed));
  }
  return {{"schema_version", kApiSchemaVersion}, {"sessions", out}};
}

json SessionManager::state(const std::string& id, const std::string& participant) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  std::optional<int> slot;
  if (participant != "spectator") {
    slot = s->slot_of(participant);
    if (!slot) throw ServiceError(403, "unknown participant '" + participant + "'");
  }
  const auto who = s->game->to_act();
  return {{"schema_version", kApiSchemaVersion},
          {"id", id},
          {"scenario", s->game->scenario()},
          {"status", to_string(s->status)},
          {"participant", participant},
          {"to_act", who ? json(s->game->slots[*who].name) : json(nullptr)},
          {"your_turn", slot && who && *who == *slot},
          {"last_event", s->events.empty() ? 0L : s->events.back().seq},
          {"view", s->game->view(slot)}};
}

json SessionManager::submit(const std::string& id, const std::string& participant, const json& action) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  const auto slot = s->slot_of(participant);
  if (!slot) throw ServiceError(403, "unknown participant '" + participant + "'");
  if (s->game->slots[*slot].automated()) throw ServiceError(403, "participant '" + participant + "' is automated");
  const long before = s->events.empty() ? 0 : s->events.back().seq;
  apply(*s, participant, action, true, nullptr);
  advance(*s, true);
  json events = json::array();
  for (const auto& e : s->events)
    if (e.seq > before) events.push_back({{"seq", e.seq}, {"type", e.type}, {"data", e.data}});
  return {{"accepted", true}, {"status", to_string(s->status)}, {"events", events}, {"view", s->game->view(slot)}};
}

void SessionManager::apply(Session& s, const std::string& participant, const json& action, bool persist,
                           const json* record) {
  const int slot = *s.slot_of(participant);
  const bool automated = s.game->slots[slot].automated();
  TurnRecord pre;
  if (record && record->contains("raw_response")) pre = turn_record_from_json(*record);
  std::string at;
  if (record && record->contains("at")) at = record->at("at").get<std::string>();
  if (at.empty()) at = now();

  auto events = s.game->apply(slot, action, automated, pre);
  if (persist) {
    json line = {{"type", "action"}, {"participant", participant}, {"action", action}, {"at", at}};
    if (automated) line["record"] = to_json(pre);
    append_line(s.file(dir_), line);
  }
  if (s.status == SessionStatus::Waiting) s.status = SessionStatus::Active;
  for (auto& [type, data] : events) emit(s, type, data);
  if (s.game->finished() && s.status != SessionStatus::Finished) {
    s.status = SessionStatus::Finished;
    s.finished_at = at;
    emit(s, "finished", {{"result", s.game->result()}});
    write_run_log(s);
  }
}

void SessionManager::advance(Session& s, bool persist) {
  while (!s.game->finished()) {
    const int slot = *s.game->to_act();
    if (!s.game->slots[slot].automated()) break;
    TurnRecord pre;
    const json action = s.game->automated_action(slot, pre);
    json record = to_json(pre);
    record["at"] = now();
    apply(s, s.game->slots[slot].name, action, persist, &record);
  }
}

void SessionManager::emit(Session& s, const std::string& type, json data) {
  const long seq = s.events.empty() ? 1 : s.events.back().seq + 1;
  s.events.push_back({seq, type, std::move(data)});
  s.cv.notify_all();
}

std::vector<Event> SessionManager::events(const std::string& id, long after, int wait_ms) {
  auto s = find(id);
  std::unique_lock lock(s->mu);
  auto ready = [&] {
    return (!s->events.empty() && s->events.back().seq > after) || s->status == SessionStatus::Finished;
  };
  if (wait_ms > 0) s->cv.wait_for(lock, std::chrono::milliseconds(wait_ms), ready);
  std::vector<Event> out;
  for (const auto& e : s->events)
    if (e.seq > after) out.push_back(e);
  return out;
}

bool SessionManager::finished(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  return s->status == SessionStatus::Finished;
}

void SessionManager::append_line(const fs::path& path, const json& line) {
  std::lock_guard lock(file_mu_);
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << line.dump() << '\n';
  out.flush();
}

void SessionManager::write_run_log(Session& s) {
  SessionLog log;
  log.session_id = s.id;
  log.scenario = s.game->scenario();
  for (const auto& slot : s.game->slots) log.agents.push_back(slot.describe());
  log.seed = s.seed;
  log.config = s.game->config();
  log.started_at = s.created_at;
  log.turns = s.game->turns;
  log.result = s.game->result();
  log.finished_at = s.finished_at;
  std::lock_guard lock(file_mu_);
  write_session_log(log, dir_ / "runs" / (s.id + ".jsonl"));
}

void SessionManager::restore() {
  std::ifstream index(dir_ / "index.jsonl");
  std::string line;
  while (std::getline(index, line)) {
    if (line.empty()) continue;
    const std::string id = json::parse(line).at("id").get<std::string>();
    std::ifstream in(dir_ / "sessions" / (id + ".jsonl"));
    std::string l;
    std::shared_ptr<Session> s;
    while (std::getline(in, l)) {
      if (l.empty()) continue;
      const json j = json::parse(l);
      if (j.at("type") == "create") {
        s = build(id, j.at("request"));
        s->created_at = j.value("at", "");
        emit(*s, "created", summary(id, *s->game, s->status, s->seed));
        for (auto& [type, data] : s->game->opening_events()) emit(*s, type, data);
      } else if (s) {
        json record = j.value("record", json::object());
        record["at"] = j.value("at", "");
        apply(*s, j.at("participant").get<std::string>(), j.at("action"), false, &record);
      }
    }
    if (!s) continue;
    advance(*s, true);  // agent turns that were cut off by a shutdown
    sessions_[id] = s;
  }
}

json SessionManager::reports() {
  const auto logs = metrics::load_session_logs(dir_ / "runs");
  std::map<std::string, std::vector<SessionLog>> by_model;
  for (const auto& log : logs) {
    const std::string model = log.agents.empty() ? "" : log.agents.front().value("name", "");
    by_model[model].push_back(log);
  }
  json out = json::array();
  for (const auto& [model, group] : by_model) out.push_back(metrics::to_json(metrics::build_report(group, model)));
  return {{"schema_version", kApiSchemaVersion}, {"reports", out}};
}

}  // namespace egoarena::service
