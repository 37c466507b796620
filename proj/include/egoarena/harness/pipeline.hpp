#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "egoarena/harness/session_log.hpp"
#include "egoarena/llm/chat.hpp"
#include "egoarena/metrics.hpp"

namespace egoarena {

// Every scenario for one agent, ending in a MetricReport.
//
// Data directory layout:
//   items/*.jsonl          multiple-choice items (all files, sorted by name)
//   maps/*.json            bomb maps, one mission each
//   dialogue/*.jsonl|json  dialogue scenarios, agent against itself
struct PipelineConfig {
  std::filesystem::path data_dir = "data";
  llm::AgentSpec agent;
  std::optional<llm::AgentSpec> judge;  // defaults to the agent spec
  std::uint64_t seed = 0;
  int parallel = 1;
  int guess_rounds = 10;
  int holdem_hands = 50;
  int blackjack_hands = 300;
  // Hold'em opponent. Without a checkpoint an aggressive agent is trained
  // with `dqn_episodes` episodes from `seed`.
  std::optional<std::filesystem::path> opponent_checkpoint;
  long dqn_episodes = 400;
};

struct PipelineOutput {
  std::vector<SessionLog> logs;  // fixed order, independent of `parallel`
  metrics::MetricReport report;
};

PipelineOutput run_pipeline(const PipelineConfig& config);

// Writes runs/<session_id>.jsonl, report.json, report.csv and
// belief_curves.csv under `out_dir`.
void write_pipeline_outputs(const PipelineOutput& output, const std::filesystem::path& out_dir);

// The same files for a report rebuilt from logs.
void write_report_files(const metrics::MetricReport& report, const std::vector<SessionLog>& logs,
                        const std::filesystem::path& out_dir);

}  // namespace egoarena
