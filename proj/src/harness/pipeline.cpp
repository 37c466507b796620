#include "egoarena/harness/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "egoarena/core/error.hpp"
#include "egoarena/dqn/checkpoint.hpp"
#include "egoarena/dqn/trainer.hpp"
#include "egoarena/harness/io.hpp"
#include "egoarena/harness/pool.hpp"
#include "egoarena/harness/runners.hpp"
#include "egoarena/llm/providers.hpp"

namespace egoarena {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> files_with(const fs::path& dir, const std::vector<std::string>& exts) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && std::find(exts.begin(), exts.end(), e.path().extension().string()) != exts.end())
      out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const dqn::QNetwork> holdem_opponent(const PipelineConfig& c) {
  if (c.opponent_checkpoint) return std::make_shared<dqn::QNetwork>(dqn::load_checkpoint(c.opponent_checkpoint->string()).network);
  dqn::TrainConfig tc;
  tc.personality = dqn::Personality::Aggressive;
  tc.episodes = c.dqn_episodes;
  tc.seed = c.seed;
  return std::make_shared<dqn::QNetwork>(dqn::train_dqn(tc).network);
}

}  // namespace

PipelineOutput run_pipeline(const PipelineConfig& c) {
  c.agent.validate();
  const llm::AgentSpec judge_spec = c.judge.value_or(c.agent);

  std::vector<ScenarioItem> items;
  for (const auto& p : files_with(c.data_dir / "items", {".jsonl"})) {
    auto more = load_items(p);
    items.insert(items.end(), more.begin(), more.end());
  }
  if (items.empty()) throw ConfigError("no multiple-choice items under " + (c.data_dir / "items").string());
  std::vector<BombMap> maps;
  for (const auto& p : files_with(c.data_dir / "maps", {".json"})) maps.push_back(load_bomb_map(p));
  if (maps.empty()) throw ConfigError("no bomb maps under " + (c.data_dir / "maps").string());
  std::vector<DialogueScenario> dialogues;
  for (const auto& p : files_with(c.data_dir / "dialogue", {".jsonl", ".json"})) {
    auto more = load_dialogue_scenarios(p);
    dialogues.insert(dialogues.end(), more.begin(), more.end());
  }
  if (dialogues.empty()) throw ConfigError("no dialogue scenarios under " + (c.data_dir / "dialogue").string());

  const auto opponent_net = holdem_opponent(c);

  std::vector<std::function<SessionLog()>> tasks;
  tasks.push_back([&] {
    auto agent = llm::make_client(c.agent);
    return run_mcq_eval(items, agent);
  });
  for (int level = 1; level <= 3; ++level)
    tasks.push_back([&, level] {
      auto agent = llm::make_client(c.agent);
      return run_guess_session(agent, level, c.guess_rounds, c.seed);
    });
  tasks.push_back([&] {
    auto agent = llm::make_client(c.agent);
    DqnPolicy opponent(opponent_net, "dqn-aggressive");
    return run_holdem_match(agent, opponent, {c.holdem_hands, c.seed, false});
  });
  tasks.push_back([&] {
    auto agent = llm::make_client(c.agent);
    return run_blackjack(agent, {c.blackjack_hands, c.seed, true});
  });
  for (std::size_t m = 0; m < maps.size(); ++m)
    tasks.push_back([&, m] {
      auto a = llm::make_client(c.agent), b = llm::make_client(c.agent), d = llm::make_client(c.agent);
      return run_bomb_mission({&a, &b, &d}, maps[m]);
    });
  for (std::size_t i = 0; i < dialogues.size(); ++i)
    tasks.push_back([&, i] {
      auto a = llm::make_client(c.agent), b = llm::make_client(c.agent), j = llm::make_client(judge_spec);
      return run_dialogue(a, b, dialogues[i], &j);
    });

  PipelineOutput out;
  out.logs.resize(tasks.size());
  std::vector<std::function<void()>> jobs;
  for (std::size_t i = 0; i < tasks.size(); ++i) jobs.push_back([&, i] { out.logs[i] = tasks[i](); });
  run_jobs(jobs, c.parallel);
  out.report = metrics::build_report(out.logs, c.agent.name);
  return out;
}

void write_report_files(const metrics::MetricReport& report, const std::vector<SessionLog>& logs,
                        const fs::path& out_dir) {
  write_text_file(out_dir / "report.json", metrics::to_json(report).dump(2) + "\n");
  write_text_file(out_dir / "report.csv", metrics::to_csv(report));
  write_text_file(out_dir / "belief_curves.csv", metrics::belief_curves_csv(metrics::belief_curves(logs)));
}

void write_pipeline_outputs(const PipelineOutput& output, const fs::path& out_dir) {
  for (const auto& log : output.logs) write_session_log(log, out_dir / "runs" / (log.session_id + ".jsonl"));
  write_report_files(output.report, output.logs, out_dir);
}

}  // namespace egoarena
