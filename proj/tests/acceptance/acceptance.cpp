// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../oracles/oracles.hpp"
#include "egoarena/core/rng.hpp"
#include "egoarena/dqn/trainer.hpp"
#include "egoarena/engines/bomb.hpp"
#include "egoarena/engines/hand_rank.hpp"
#include "egoarena/engines/holdem.hpp"
#include "egoarena/harness/io.hpp"
#include "egoarena/harness/pipeline.hpp"
#include "egoarena/harness/runners.hpp"
#include "egoarena/llm/agent_config.hpp"
#include "egoarena/metrics.hpp"
#include "egoarena/opponents.hpp"
#include "egoarena/perspective.hpp"

using namespace egoarena;
using nlohmann::json;

namespace {

const std::string kSource = EGOARENA_SOURCE_DIR;

struct Outcome {
  bool pass;
  std::string detail;
};

// --- belief accuracy on reference belief rows --------------------------------

std::vector<BeliefRecord> rows(const std::vector<double>& beliefs, const std::vector<double>& actual) {
  std::vector<BeliefRecord> out;
  for (std::size_t i = 0; i < beliefs.size(); ++i)
    out.push_back({static_cast<int>(i) + 1, beliefs[i], actual[i]});
  return out;
}

Outcome belief_rows() {
  const std::vector<double> l1(10, 50.0);
  std::vector<double> l2;
  for (int r = 1; r <= 10; ++r) l2.push_back(level2_action(r));
  struct Row {
    const char* label;
    std::vector<double> beliefs;
    const std::vector<double>* actual;
    double expected;
  };
  const std::vector<Row> table = {
      {"GPT-4-Turbo L1", {50, 45, 48, 47, 48, 49, 48, 47, 46, 45}, &l1, 0.1},
      {"Claude L1", {65, 45, 35, 25, 20, 50, 50, 50, 50, 50}, &l1, 0.5},
      {"LLaMa-3.1-405B L1", {50, 33, 45, 50, 50, 50, 50, 50, 50, 50}, &l1, 0.8},
      {"GPT-4o L2", {50, 40, 40, 30, 25, 20, 15, 10, 10, 5}, &l2, 0.4},
      {"GPT-4-Turbo L2", {50, 45, 48, 42, 36, 33, 28, 22, 18, 12}, &l2, 0.2},
  };
  std::string detail;
  bool ok = true;
  for (const auto& r : table) {
    const double acc = metrics::belief_accuracy(rows(r.beliefs, *r.actual));
    ok = ok && acc == r.expected;
    detail += std::string(detail.empty() ? "" : ", ") + r.label + "=" + std::to_string(acc).substr(0, 3);
  }
  return {ok, detail};
}

// --- AVG column --------------------------------------------------------------

Outcome avg_rows() {
  struct Row {
    const char* label;
    std::array<double, 11> scores;
    double avg;
  };
  // first-person static, L1, L2, L3, texas, parallel, counterfactual,
  // real-world, adversarial, cooperative, social goal
  const std::vector<Row> table = {
      {"LLaMa-3-8B", {66.2, 0, 0, 0, 48, 6.7, 71.0, 67.2, 51.3, 49.7, 22.5}, 34.8},
      {"LLaMa-3-70B", {63.2, 10, 20, 10, 38, 13.3, 59.0, 73.2, 45.0, 53.3, 25.5}, 37.3},
      {"LLaMa-3.1-405B", {65.8, 80, 20, 20, 56, 36.7, 66.0, 77.3, 52.3, 65.2, 34.0}, 52.1},
      {"Claude-3.5-Sonnet", {80.5, 50, 10, 40, 66, 90.0, 74.0, 79.8, 55.0, 94.8, 50.5}, 62.8},
      {"GPT-3.5-Turbo", {51.9, 10, 10, 0, 56, 13.3, 37.0, 72.2, 46.7, 50.3, 33.0}, 34.6},
      {"GPT-4-Turbo", {69.7, 10, 20, 10, 60, 23.3, 70.0, 75.7, 54.7, 75.6, 52.0}, 47.4},
      {"GPT-4o", {71.0, 10, 40, 10, 62, 36.7, 52.0, 85.8, 54.0, 80.8, 53.0}, 50.5},
      {"o1-preview", {77.5, 90, 90, 90, 72, 86.7, 90.0, 84.7, 56.7, 96.3, 52.5}, 80.6},
      {"Human", {97.4, 90, 89, 85, 94, 96.7, 97.0, 96.3, 56.6, 100.0, 69.0}, 88.3},
  };
  bool ok = true;
  int matched = 0;
  std::string bad;
  for (const auto& r : table) {
    const double avg = metrics::avg_report(r.scores);
    if (std::fabs(avg - r.avg) <= 0.05 + 1e-9)
      ++matched;
    else {
      ok = false;
      bad += std::string(" ") + r.label + "=" + std::to_string(avg);
    }
  }
  return {ok, std::to_string(matched) + "/" + std::to_string(table.size()) + " rows within 0.05" + bad};
}

// --- level-2 opponent ----------------------------------------------------------

Outcome level2_sequence() {
  std::string seq;
  bool ok = true;
  for (int r = 1; r <= 10; ++r) {
    const int v = level2_action(r);
    ok = ok && v == 55 - 5 * r;
    seq += (r > 1 ? "," : "") + std::to_string(v);
  }
  return {ok, seq};
}

// --- hold'em ---------------------------------------------------------------------

Outcome holdem_engine() {
  long violations = 0;
  RandomLegalPolicy a(11), b(12);
  for (int h = 0; h < 10000; ++h) {
    HoldemState s = holdem_deal(derive_seed(2024, h), h % 2);
    const int chips = s.total_chips();
    while (!s.terminal()) {
      s = holdem_step(s, s.to_act == 0 ? a.act(s, 0) : b.act(s, 1));
      if (s.total_chips() != chips) ++violations;
    }
    const auto pay = s.payoffs();
    if (pay[0] + pay[1] != 0) ++violations;
  }

  long mismatches = 0;
  Rng rng(77);
  std::vector<std::vector<int>> keys;
  std::vector<HandRank> ranks;
  for (int i = 0; i < 1000; ++i) {
    auto deck = fresh_deck();
    rng.shuffle(std::span<Card>(deck));
    std::array<Card, 7> seven;
    std::copy_n(deck.begin(), 7, seven.begin());
    const HandRank got = holdem_rank_hand(std::span<const Card, 7>(seven));
    const auto want = oracle::best_of_21(seven);
    if (static_cast<int>(got.category) != want[0]) ++mismatches;
    keys.push_back(want);
    ranks.push_back(got);
  }
  // Ordering must agree with the oracle on every pair of neighbours.
  for (std::size_t i = 1; i < keys.size(); ++i) {
    const int o = keys[i - 1] < keys[i] ? -1 : (keys[i] < keys[i - 1] ? 1 : 0);
    const int e = ranks[i - 1] < ranks[i] ? -1 : (ranks[i] < ranks[i - 1] ? 1 : 0);
    if (o != e) ++mismatches;
  }
  return {violations == 0 && mismatches == 0, "conservation violations " + std::to_string(violations) +
                                                  " over 10000 hands, rank mismatches " + std::to_string(mismatches) +
                                                  " over 1000 sets"};
}

// --- blackjack --------------------------------------------------------------------

Outcome blackjack_oracle() {
  const auto engine = play_blackjack_policy(
      [](const BlackjackState& s) {
        return blackjack_hand_value(s.player_hand).value < 17 ? BlackjackAction::Hit : BlackjackAction::Stand;
      },
      100000, 4242);
  const double engine_rate = metrics::win_rate(engine.wins, engine.ties, engine.losses);
  const double oracle_rate = oracle::blackjack_threshold_mc(1000000, 99).win_rate();
  const double gap = std::fabs(engine_rate - oracle_rate);
  char buf[160];
  std::snprintf(buf, sizeof buf, "engine %.2f%% (100000 hands), oracle %.2f%% (1000000 hands), gap %.2f pp", engine_rate,
                oracle_rate, gap);
  return {gap <= 0.5, buf};
}

// --- dqn personalities ----------------------------------------------------------------

Outcome dqn_gap() {
  auto share = [](dqn::Personality p) {
    dqn::TrainConfig cfg;
    cfg.personality = p;
    cfg.seed = 1;
    const auto net = dqn::train_dqn(cfg).network;
    return dqn::evaluate_action_share(net, 1000, 31337).aggressive_share();
  };
  const double agg = share(dqn::Personality::Aggressive);
  const double con = share(dqn::Personality::Conservative);
  char buf[128];
  std::snprintf(buf, sizeof buf, "raise+call share aggressive %.1f%%, conservative %.1f%%, gap %.1f pp", 100 * agg,
                100 * con, 100 * (agg - con));
  return {agg - con >= 0.20, buf};
}

// --- converter ---------------------------------------------------------------------------

Outcome converter_corpus() {
  std::ifstream in(kSource + "/tests/data/perspective_golden.jsonl");
  std::string line;
  int items = 0, residue = 0, index_changed = 0, agreement = 0, failed = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    ThirdPersonItem t;
    t.story = j.at("story");
    t.question = j.at("question");
    t.options = j.at("options").get<std::vector<std::string>>();
    t.answer_index = j.at("answer_index");
    t.characters = j.at("characters").get<std::vector<std::string>>();
    t.target = j.at("target");
    t.background = j.value("background", "");
    ++items;
    FirstPersonItem f;
    try {
      f = convert_item(t);
    } catch (const Error&) {
      ++failed;
      continue;
    }
    residue += count_name(f.story, t.target) + count_name(f.question, t.target);
    for (const auto& o : f.options) residue += count_name(o, t.target);
    index_changed += f.answer_index != t.answer_index || f.options.size() != t.options.size();
    agreement += static_cast<int>(agreement_violations(f.story).size() + agreement_violations(f.question).size());
  }
  return {items >= 20 && residue == 0 && index_changed == 0 && agreement == 0 && failed == 0,
          std::to_string(items) + " items, residue " + std::to_string(residue) + ", answer changes " +
              std::to_string(index_changed) + ", agreement violations " + std::to_string(agreement) + ", failures " +
              std::to_string(failed)};
}

// --- end to end ---------------------------------------------------------------------------

Outcome e2e_determinism() {
  PipelineConfig cfg;
  cfg.data_dir = kSource + "/data";
  cfg.agent = llm::load_agent_spec(kSource + "/data/agents/stub.yaml");
  cfg.seed = 7;
  auto run = [&](int parallel) {
    cfg.parallel = parallel;
    const auto out = run_pipeline(cfg);
    std::string logs;
    for (const auto& l : out.logs) logs += to_jsonl(l);
    return std::make_pair(metrics::to_json(out.report).dump(2) + "\n", logs);
  };
  const auto a = run(1);
  const auto b = run(2);
  std::ifstream golden(kSource + "/tests/data/e2e_report.json");
  std::stringstream g;
  g << golden.rdbuf();
  const bool same_runs = a == b;
  const bool same_golden = g.str() == a.first;
  return {same_runs && same_golden, std::string("two runs ") + (same_runs ? "identical" : "DIFFER") +
                                        ", checked-in report " + (same_golden ? "identical" : "DIFFERS")};
}

// --- bomb ----------------------------------------------------------------------------------

Outcome bomb_fixture() {
  BombMap map = load_bomb_map(kSource + "/data/fixtures/one_bomb.json");
  // Round 1: Alpha cuts red. Round 2: Bravo cuts blue.
  std::vector<std::array<BombAction, 3>> script = {
      {BombAction::cut("red"), BombAction::wait(), BombAction::wait()},
      {BombAction::wait(), BombAction::cut("blue"), BombAction::wait()},
  };
  std::vector<int> points;
  for (const auto& step : script) {
    auto r = bomb_step(map, step);
    points.push_back(r.points);
    map = r.state;
  }
  const double ts = metrics::team_score(map.score, bomb_max_score(map));
  const bool ok = points == std::vector<int>{10, 10} && map.score == 20 && ts == 100.0 && map.bombs[0].defused();
  return {ok, "phase points " + std::to_string(points[0]) + "+" + std::to_string(points[1]) + ", team score " +
                  std::to_string(ts).substr(0, 5)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> checks = {
      {"belief-accuracy-reference-rows", belief_rows},
      {"report-avg-reference-rows", avg_rows},
      {"guess-level2-sequence", level2_sequence},
      {"holdem-conservation-and-ranking", holdem_engine},
      {"blackjack-threshold17-vs-oracle", blackjack_oracle},
      {"dqn-personality-separation", dqn_gap},
      {"converter-golden-corpus", converter_corpus},
      {"pipeline-determinism", e2e_determinism},
      {"bomb-one-bomb-fixture", bomb_fixture},
  };
  int failed = 0;
  for (const auto& [name, fn] : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
