#include "egoarena/harness/session_log.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "egoarena/core/error.hpp"

namespace egoarena {

using nlohmann::json;

std::vector<BeliefRecord> SessionLog::beliefs() const {
  std::vector<BeliefRecord> out;
  for (const auto& t : turns)
    if (t.belief) out.push_back(*t.belief);
  return out;
}

json to_json(const BeliefRecord& b) {
  return {{"round", b.round}, {"predicted", b.predicted ? json(*b.predicted) : json(nullptr)}, {"actual", b.actual}};
}

BeliefRecord belief_record_from_json(const json& j) {
  BeliefRecord b;
  b.round = j.at("round").get<int>();
  if (!j.at("predicted").is_null()) b.predicted = j.at("predicted").get<double>();
  b.actual = j.at("actual").get<double>();
  return b;
}

json to_json(const TurnRecord& t) {
  json prompt = json::array();
  for (const auto& m : t.prompt) prompt.push_back(llm::to_json(m));
  json exchanges = json::array();
  for (const auto& e : t.exchanges) exchanges.push_back(llm::to_json(e));
  return {{"type", "turn"},
          {"round", t.round},
          {"actor", t.actor},
          {"prompt", prompt},
          {"raw_response", t.raw_response},
          {"parsed_action", t.parsed_action},
          {"belief", t.belief ? to_json(*t.belief) : json(nullptr)},
          {"state_before", t.state_before},
          {"state_after", t.state_after},
          {"notes", t.notes},
          {"exchanges", exchanges},
          {"extra", t.extra}};
}

TurnRecord turn_record_from_json(const json& j) {
  TurnRecord t;
  t.round = j.at("round").get<int>();
  t.actor = j.at("actor").get<std::string>();
  for (const auto& m : j.at("prompt")) t.prompt.push_back(llm::chat_message_from_json(m));
  t.raw_response = j.at("raw_response").get<std::string>();
  t.parsed_action = j.at("parsed_action").get<std::string>();
  if (!j.at("belief").is_null()) t.belief = belief_record_from_json(j.at("belief"));
  t.state_before = j.at("state_before").get<std::string>();
  t.state_after = j.at("state_after").get<std::string>();
  t.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& e : j.at("exchanges")) {
    llm::Exchange x;
    x.attempt = e.at("attempt").get<int>();
    for (const auto& m : e.at("request")) x.request.push_back(llm::chat_message_from_json(m));
    x.response = e.at("response").get<std::string>();
    x.status = e.at("status").get<int>();
    x.error = e.at("error").get<std::string>();
    x.ok = e.at("ok").get<bool>();
    x.transient = e.value("transient", false);
    t.exchanges.push_back(std::move(x));
  }
  t.extra = j.value("extra", json::object());
  return t;
}

json header_json(const SessionLog& log) {
  return {{"type", "header"},   {"schema_version", kSessionLogSchemaVersion},
          {"session_id", log.session_id}, {"scenario", log.scenario},
          {"agents", log.agents}, {"seed", log.seed},
          {"config", log.config}, {"started_at", log.started_at}};
}

json trailer_json(const SessionLog& log) {
  return {{"type", "result"}, {"payload", log.result.value_or(json(nullptr))}, {"finished_at", log.finished_at}};
}

std::string to_jsonl(const SessionLog& log) {
  std::string out = header_json(log).dump() + "\n";
  for (const auto& t : log.turns) out += to_json(t).dump() + "\n";
  if (log.result) out += trailer_json(log).dump() + "\n";
  return out;
}

namespace {

void read_line(const json& j, SessionLog& log, bool& header) {
  const auto type = j.at("type").get<std::string>();
  if (type == "header") {
    if (j.at("schema_version").get<int>() != kSessionLogSchemaVersion)
      throw ConfigError("unsupported schema_version " + j.at("schema_version").dump());
    log.session_id = j.at("session_id").get<std::string>();
    log.scenario = j.at("scenario").get<std::string>();
    log.agents = j.at("agents").get<std::vector<json>>();
    log.seed = j.at("seed").get<std::uint64_t>();
    log.config = j.at("config");
    log.started_at = j.at("started_at").get<std::string>();
    header = true;
  } else if (type == "turn") {
    log.turns.push_back(turn_record_from_json(j));
  } else if (type == "result") {
    log.result = j.at("payload");
    log.finished_at = j.at("finished_at").get<std::string>();
  } else {
    throw ConfigError("unknown type '" + type + "'");
  }
}

}  // namespace

SessionLog session_log_from_jsonl(const std::string& text) {
  SessionLog log;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      read_line(json::parse(line), log, header);
    } catch (const json::exception& e) {
      throw ConfigError("session log line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("session log line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header) throw ConfigError("session log has no header line");
  return log;
}

void write_session_log(const SessionLog& log, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_jsonl(log);
}

SessionLog read_session_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return session_log_from_jsonl(ss.str());
}

Clock Clock::wall() { return Clock(false); }
Clock Clock::logical() { return Clock(true); }

std::string Clock::now() {
  if (logical_) return "logical:" + std::to_string(tick_++);
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace egoarena
