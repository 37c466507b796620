#include "egoarena/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "egoarena/core/error.hpp"

namespace egoarena::metrics {

using nlohmann::json;

double round_half_up_1(double x) { return std::floor(x * 10.0 + 0.5 + 1e-9) / 10.0; }

double belief_accuracy(const std::vector<BeliefRecord>& records) {
  if (records.empty()) throw InvalidArgument("belief_accuracy needs at least one record");
  auto tenths = [](double v) { return std::llround(v * 10.0); };
  long correct = 0;
  for (const auto& r : records)
    if (r.predicted && tenths(*r.predicted) == tenths(r.actual)) ++correct;
  return static_cast<double>(correct) / static_cast<double>(records.size());
}

double win_rate(long wins, long ties, long losses) {
  if (wins < 0 || ties < 0 || losses < 0) throw InvalidArgument("win_rate counts must be non-negative");
  const long total = wins + ties + losses;
  if (total == 0) throw InvalidArgument("win_rate needs at least one hand");
  return 100.0 * static_cast<double>(wins) / static_cast<double>(total);
}

double team_score(double points, double max_points) {
  if (!(max_points > 0)) throw InvalidArgument("team_score needs a positive maximum");
  if (points < 0 || points > max_points) throw InvalidArgument("team_score points outside [0, max]");
  return 100.0 * points / max_points;
}

const std::array<const char*, kNumSlots>& slot_names() {
  static const std::array<const char*, kNumSlots> names = {
      "first_person_static", "g08a_level1",    "g08a_level2", "g08a_level3", "texas",     "parallel_world",
      "counterfactual",      "real_world",     "adversarial", "cooperative", "social_goal"};
  return names;
}

double avg_report(const std::array<double, kNumSlots>& scores) {
  double sum = 0;
  for (double s : scores) sum += s;
  return round_half_up_1(sum / kNumSlots);
}

std::optional<double> avg_report(const std::array<std::optional<double>, kNumSlots>& scores) {
  std::array<double, kNumSlots> values{};
  for (int i = 0; i < kNumSlots; ++i) {
    if (!scores[i]) return std::nullopt;
    values[i] = *scores[i];
  }
  return avg_report(values);
}

void MetricReport::set(Slot s, double value) {
  if (value < 0 || value > 100) throw InvalidArgument("report score outside [0, 100]");
  scores[static_cast<int>(s)] = round_half_up_1(value);
}

void MetricReport::finalize() {
  avg = avg_report(scores);
  for (auto& ids : sessions) std::sort(ids.begin(), ids.end());  // independent of log order
}

json to_json(const MetricReport& r) {
  json scores = json::object();
  json sessions = json::object();
  for (int i = 0; i < kNumSlots; ++i) {
    scores[slot_names()[i]] = r.scores[i] ? json(*r.scores[i]) : json(nullptr);
    sessions[slot_names()[i]] = r.sessions[i];
  }
  return {{"schema_version", kReportSchemaVersion},
          {"model", r.model},
          {"scores", scores},
          {"avg", r.avg ? json(*r.avg) : json(nullptr)},
          {"sessions", sessions}};
}

namespace {
std::string fmt1(std::optional<double> v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *v);
  return buf;
}
}  // namespace

std::string to_csv(const MetricReport& r) {
  std::string head = "model";
  std::string row = r.model;
  for (int i = 0; i < kNumSlots; ++i) {
    head += std::string(",") + slot_names()[i];
    row += "," + fmt1(r.scores[i]);
  }
  return head + ",avg\n" + row + "," + fmt1(r.avg) + "\n";
}

MetricReport build_report(const std::vector<SessionLog>& logs, const std::string& model) {
  MetricReport report;
  report.model = model;
  auto add_session = [&](Slot s, const std::string& id) {
    auto& v = report.sessions[static_cast<int>(s)];
    if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
  };

  std::map<std::string, std::pair<long, long>> mcq;  // scenario -> (correct, total)
  std::map<int, std::vector<BeliefRecord>> guess;
  long pred_correct = 0, pred_scored = 0;
  long wins = 0, ties = 0, losses = 0;
  std::vector<double> team;
  std::vector<double> judge;

  const std::map<std::string, Slot> mcq_slots = {{"static_cognition", Slot::FirstPersonStatic},
                                                 {"parallel_world", Slot::ParallelWorld},
                                                 {"counterfactual", Slot::Counterfactual},
                                                 {"real_world", Slot::RealWorld}};

  for (const auto& log : logs) {
    if (!log.result) continue;  // unfinished sessions do not count
    const json& res = *log.result;
    if (log.scenario == "mcq") {
      for (const auto& [kind, counts] : res.at("by_scenario").items()) {
        auto& acc = mcq[kind];
        acc.first += counts.at("correct").get<long>();
        acc.second += counts.at("total").get<long>();
        if (auto it = mcq_slots.find(kind); it != mcq_slots.end()) add_session(it->second, log.session_id);
      }
    } else if (log.scenario == "guess") {
      const int level = log.config.at("level").get<int>();
      const auto b = log.beliefs();
      auto& pool = guess[level];
      pool.insert(pool.end(), b.begin(), b.end());
      if (level >= 1 && level <= 3) add_session(static_cast<Slot>(static_cast<int>(Slot::GuessLevel1) + level - 1), log.session_id);
    } else if (log.scenario == "holdem") {
      pred_correct += res.at("predictions_correct").get<long>();
      pred_scored += res.at("predictions_scored").get<long>();
      add_session(Slot::Texas, log.session_id);
    } else if (log.scenario == "blackjack") {
      wins += res.at("wins").get<long>();
      ties += res.at("ties").get<long>();
      losses += res.at("losses").get<long>();
      add_session(Slot::Adversarial, log.session_id);
    } else if (log.scenario == "bomb") {
      team.push_back(res.at("team_score").get<double>());
      add_session(Slot::Cooperative, log.session_id);
    } else if (log.scenario == "dialogue") {
      for (const auto& s : res.at("scores"))
        if (!s.is_null()) judge.push_back(s.get<double>());
      add_session(Slot::SocialGoal, log.session_id);
    }
  }

  for (const auto& [kind, counts] : mcq)
    if (auto it = mcq_slots.find(kind); it != mcq_slots.end() && counts.second > 0)
      report.set(it->second, 100.0 * static_cast<double>(counts.first) / static_cast<double>(counts.second));
  for (const auto& [level, records] : guess)
    if (level >= 1 && level <= 3 && !records.empty())
      report.set(static_cast<Slot>(static_cast<int>(Slot::GuessLevel1) + level - 1), 100.0 * belief_accuracy(records));
  if (pred_scored > 0) report.set(Slot::Texas, 100.0 * static_cast<double>(pred_correct) / static_cast<double>(pred_scored));
  if (wins + ties + losses > 0) report.set(Slot::Adversarial, win_rate(wins, ties, losses));
  if (!team.empty()) {
    double sum = 0;
    for (double t : team) sum += t;
    report.set(Slot::Cooperative, sum / static_cast<double>(team.size()));
  }
  if (!judge.empty()) {
    double sum = 0;
    for (double s : judge) sum += s;
    report.set(Slot::SocialGoal, 10.0 * sum / static_cast<double>(judge.size()));
  }
  report.finalize();
  return report;
}

std::vector<SessionLog> load_session_logs(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ConfigError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".jsonl") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<SessionLog> logs;
  for (const auto& p : paths) logs.push_back(read_session_log(p));
  return logs;
}

std::vector<BeliefCurveRow> belief_curves(const std::vector<SessionLog>& logs) {
  std::vector<BeliefCurveRow> rows;
  for (const auto& log : logs) {
    if (log.scenario != "guess") continue;
    const std::string model = log.agents.empty() ? "" : log.agents.front().value("name", "");
    const int level = log.config.at("level").get<int>();
    std::vector<BeliefCurveRow> session;
    for (const auto& t : log.turns) {
      if (!t.belief) continue;
      session.push_back({model, level, t.belief->round, t.belief->predicted, t.belief->actual,
                         t.extra.value("gold", 0.0)});
    }
    std::stable_sort(session.begin(), session.end(), [](const auto& a, const auto& b) { return a.round < b.round; });
    rows.insert(rows.end(), session.begin(), session.end());
  }
  return rows;
}

std::string belief_curves_csv(const std::vector<BeliefCurveRow>& rows) {
  std::string out = "model,level,round,belief,actual,gold\n";
  for (const auto& r : rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, ",%d,%d,%s,%.1f,%.2f\n", r.level, r.round, fmt1(r.belief).c_str(), r.actual, r.gold);
    out += r.model + buf;
  }
  return out;
}

}  // namespace egoarena::metrics
