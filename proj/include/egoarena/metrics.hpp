#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "egoarena/harness/session_log.hpp"

namespace egoarena::metrics {

// Fraction of records whose prediction equals the actual action after both
// are rounded to one decimal. A missing prediction counts as wrong.
// Throws InvalidArgument on an empty list.
double belief_accuracy(const std::vector<BeliefRecord>& records);

// 100 x wins / (wins + ties + losses); ties are not wins.
double win_rate(long wins, long ties, long losses);

// 100 x points / max_points.
double team_score(double points, double max_points);

// Half-up rounding to one decimal, tolerant of binary representation error
// (34.75 stored as 34.7499999... still rounds to 34.8).
double round_half_up_1(double x);

inline constexpr int kNumSlots = 11;

// Report columns, in table order.
enum class Slot {
  FirstPersonStatic,
  GuessLevel1,
  GuessLevel2,
  GuessLevel3,
  Texas,
  ParallelWorld,
  Counterfactual,
  RealWorld,
  Adversarial,
  Cooperative,
  SocialGoal,
};

const std::array<const char*, kNumSlots>& slot_names();

// Mean of the eleven scores, half-up to one decimal. nullopt when any slot is
// missing (never zero-filled).
std::optional<double> avg_report(const std::array<std::optional<double>, kNumSlots>& scores);
double avg_report(const std::array<double, kNumSlots>& scores);

inline constexpr int kReportSchemaVersion = 1;

struct MetricReport {
  std::string model;
  std::array<std::optional<double>, kNumSlots> scores{};
  std::optional<double> avg;
  std::array<std::vector<std::string>, kNumSlots> sessions{};  // provenance

  void set(Slot s, double value);
  void finalize();  // computes avg
};

nlohmann::json to_json(const MetricReport& r);
// Flat summary: a header row of slot names plus "avg", then one value row.
std::string to_csv(const MetricReport& r);

// Aggregates completed session logs into report slots:
//   MCQ logs       accuracy per item scenario (static, parallel, counterfactual, real-world)
//   guess logs     100 x belief accuracy, pooled per level
//   holdem logs    opponent-action prediction accuracy, pooled
//   blackjack logs win rate, pooled counts
//   bomb logs      mean team score over missions
//   dialogue logs  10 x mean judge score over scored characters
// Slots without logs stay empty. Scores are rounded half-up to one decimal.
MetricReport build_report(const std::vector<SessionLog>& logs, const std::string& model);

// Loads every *.jsonl session log under `dir` (sorted by path).
std::vector<SessionLog> load_session_logs(const std::filesystem::path& dir);

struct BeliefCurveRow {
  std::string model;
  int level = 0;
  int round = 0;
  std::optional<double> belief;
  double actual = 0;
  double gold = 0;
};

// One row per round of every guess session, sessions in input order and rows
// sorted by round within each session.
std::vector<BeliefCurveRow> belief_curves(const std::vector<SessionLog>& logs);
std::string belief_curves_csv(const std::vector<BeliefCurveRow>& rows);

}  // namespace egoarena::metrics
