// Command-line entry points: dataset conversion, per-scenario evaluations,
// DQN training, report aggregation and the session service.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "egoarena/dqn/checkpoint.hpp"
#include "egoarena/dqn/trainer.hpp"
#include "egoarena/harness/io.hpp"
#include "egoarena/harness/pipeline.hpp"
#include "egoarena/harness/pool.hpp"
#include "egoarena/harness/runners.hpp"
#include "egoarena/llm/agent_config.hpp"
#include "egoarena/llm/providers.hpp"
#include "egoarena/metrics.hpp"
#include "egoarena/perspective.hpp"
#include "egoarena/service/http.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace egoarena;

namespace {

struct Common {
  std::string agent;
  std::uint64_t seed = 0;
  std::string out = "runs";
  int parallel = 1;
  bool wall_clock = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_agent = true) {
  auto* a = cmd->add_option("--agent", c.agent, "Agent spec file (YAML or JSON)")->check(CLI::ExistingFile);
  if (needs_agent) a->required();
  cmd->add_option("--seed", c.seed, "Base seed")->capture_default_str();
  cmd->add_option("--out", c.out, "Output directory for session logs")->capture_default_str();
  cmd->add_option("--parallel", c.parallel, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_flag("--wall-clock", c.wall_clock, "Stamp logs with wall-clock time instead of logical ticks");
}

RunOptions run_options(const Common& c) { return {c.wall_clock, ""}; }

fs::path save(const SessionLog& log, const Common& c) {
  const fs::path path = fs::path(c.out) / (log.session_id + ".jsonl");
  write_session_log(log, path);
  return path;
}

void print_result(const SessionLog& log, const fs::path& path) {
  std::cout << log.scenario << " session " << log.session_id << " -> " << path.string() << "\n";
  if (log.result) std::cout << log.result->dump(2) << "\n";
}

std::vector<fs::path> jsonl_files(const fs::path& p) {
  if (!fs::is_directory(p)) return {p};
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(p))
    if (e.path().extension() == ".jsonl") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string json_list(const json& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + (x.is_null() ? std::string("-") : x.dump());
  return s;
}

// --- convert ---

int cmd_convert(const std::string& in, const std::string& out, const std::string& report_path) {
  std::ifstream src(in);
  if (!src) throw ConfigError("cannot open " + in);
  std::string line, items, report;
  int n = 0, lineno = 0, flagged = 0;
  while (std::getline(src, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const json j = json::parse(line);
    ThirdPersonItem t;
    t.story = j.at("story");
    t.question = j.at("question");
    t.options = j.at("options").get<std::vector<std::string>>();
    t.answer_index = j.at("answer_index");
    t.characters = j.value("characters", std::vector<std::string>{});
    t.target = j.at("target");
    t.background = j.value("background", "");
    const std::string id = j.value("id", "line-" + std::to_string(lineno));
    ConversionReport rep;
    FirstPersonItem f;
    try {
      f = convert_item(t, &rep);
    } catch (const ConversionError& e) {
      throw ConversionError(id + "/" + e.where(), e.what());
    }
    ScenarioItem item;
    item.id = id;
    item.pillar = pillar_from_string(j.value("pillar", "cognitive"));
    item.scenario = scenario_kind_from_string(j.value("scenario", "static_cognition"));
    item.system_message = f.system_message;
    item.story = f.story;
    item.question = f.question;
    item.options = f.options;
    item.answer_index = f.answer_index;
    item.validate();
    items += to_json(item).dump() + "\n";
    for (const auto& e : rep.entries) {
      report += json{{"id", id}, {"field", e.field}, {"sentence", e.sentence}, {"reason", e.reason}}.dump() + "\n";
      ++flagged;
    }
    ++n;
  }
  write_text_file(out, items);
  if (!report_path.empty()) write_text_file(report_path, report);
  std::cout << "converted " << n << " items -> " << out << "\n";
  std::cout << flagged << " sentence(s) flagged for review" << (report_path.empty() ? "" : " -> " + report_path) << "\n";
  return 0;
}

// --- reports ---

int cmd_report(const std::string& in, const std::string& out, const std::string& only) {
  const auto logs = metrics::load_session_logs(in);
  std::map<std::string, std::vector<SessionLog>> by_model;
  for (const auto& log : logs) {
    const std::string model = log.agents.empty() ? "" : log.agents.front().value("name", "");
    if (only.empty() || model == only) by_model[model].push_back(log);
  }
  if (by_model.empty()) throw ConfigError("no session logs" + (only.empty() ? "" : " for model " + only) + " in " + in);
  for (const auto& [model, group] : by_model) {
    const auto report = metrics::build_report(group, model);
    const fs::path dir = by_model.size() == 1 ? fs::path(out) : fs::path(out) / model;
    write_report_files(report, group, dir);
    const json j = metrics::to_json(report);
    std::cout << model << ": " << group.size() << " session(s)\n";
    for (const char* name : metrics::slot_names()) {
      const json& v = j["scores"][name];
      std::cout << "  " << name << " = " << (v.is_null() ? "missing" : v.dump()) << "\n";
    }
    std::cout << "  AVG = " << (j["avg"].is_null() ? "n/a (slots missing)" : j["avg"].dump()) << "\n";
    std::cout << "  -> " << (dir / "report.json").string() << "\n";
  }
  return 0;
}

std::atomic<service::ArenaServer*> g_server{nullptr};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Egocentric theory-of-mind arena: evaluations, training and session service"};
  app.require_subcommand(1);

  // convert
  std::string conv_in, conv_out, conv_report;
  auto* convert = app.add_subcommand("convert", "Rewrite third-person story items into first-person items");
  convert->add_option("--in", conv_in, "Third-person JSONL")->required()->check(CLI::ExistingFile);
  convert->add_option("--out", conv_out, "First-person item JSONL")->required();
  convert->add_option("--report", conv_report, "Write sentences that need manual review to this JSONL file");

  // eval-static
  Common st;
  std::string items_path = "data/items";
  auto* eval_static = app.add_subcommand("eval-static", "Multiple-choice first-person items");
  add_common(eval_static, st);
  eval_static->add_option("--items", items_path, "Item JSONL file or directory")->check(CLI::ExistingPath)->capture_default_str();

  // eval-guess
  Common gs;
  int level = 1, rounds = kGuessRounds;
  auto* eval_guess = app.add_subcommand("eval-guess", "G0.8A against a rule-based opponent");
  add_common(eval_guess, gs);
  eval_guess->add_option("--level", level, "Opponent level")->required()->check(CLI::Range(1, 3));
  eval_guess->add_option("--rounds", rounds, "Rounds")->check(CLI::Range(1, 100))->capture_default_str();

  // eval-holdem
  Common hs;
  std::string opponent_ckpt, personality = "aggressive";
  int hands = 50;
  long holdem_episodes = 3000;
  bool mirrored = false;
  auto* eval_holdem = app.add_subcommand("eval-holdem", "Limit Texas Hold'em against a DQN opponent");
  add_common(eval_holdem, hs);
  eval_holdem->add_option("--opponent", opponent_ckpt, "DQN checkpoint; trained on the fly when absent")
      ->check(CLI::ExistingFile);
  eval_holdem->add_option("--personality", personality, "Personality when training on the fly")->capture_default_str();
  eval_holdem->add_option("--episodes", holdem_episodes, "Training episodes when training on the fly")->capture_default_str();
  eval_holdem->add_option("--hands", hands, "Hands")->check(CLI::PositiveNumber)->capture_default_str();
  eval_holdem->add_flag("--mirrored", mirrored, "Play each deal twice with seats swapped");

  // eval-blackjack
  Common bs;
  int bj_hands = 300;
  auto* eval_bj = app.add_subcommand("eval-blackjack", "Blackjack against the dealer");
  add_common(eval_bj, bs);
  eval_bj->add_option("--hands", bj_hands, "Hands")->check(CLI::PositiveNumber)->capture_default_str();

  // eval-bomb
  Common bm;
  std::vector<std::string> maps;
  std::vector<std::string> teammates;
  auto* eval_bomb = app.add_subcommand("eval-bomb", "Three-agent bomb defusal mission");
  add_common(eval_bomb, bm);
  eval_bomb->add_option("--map", maps, "Map file(s)")->required()->check(CLI::ExistingFile);
  eval_bomb->add_option("--teammate", teammates, "Spec files for the second and third agents (default: --agent)")
      ->check(CLI::ExistingFile)
      ->expected(0, 2);

  // eval-dialogue
  Common dl;
  std::string partner, judge, scenarios = "data/dialogue/scenarios.jsonl";
  auto* eval_dialogue = app.add_subcommand("eval-dialogue", "Two-party social dialogue with a judge");
  add_common(eval_dialogue, dl);
  eval_dialogue->add_option("--partner", partner, "Spec for the second character (default: --agent)")->check(CLI::ExistingFile);
  eval_dialogue->add_option("--judge", judge, "Judge spec (default: --agent)")->check(CLI::ExistingFile);
  eval_dialogue->add_option("--scenarios", scenarios, "Scenario JSON/JSONL")->check(CLI::ExistingFile)->capture_default_str();

  // eval-all
  Common all;
  std::string data_dir = "data", all_judge;
  long all_episodes = 400;
  auto* eval_all = app.add_subcommand("eval-all", "Every scenario, then the eleven-slot report");
  add_common(eval_all, all);
  eval_all->add_option("--data", data_dir, "Data directory")->check(CLI::ExistingDirectory)->capture_default_str();
  eval_all->add_option("--judge", all_judge, "Judge spec (default: --agent)")->check(CLI::ExistingFile);
  eval_all->add_option("--opponent", opponent_ckpt, "Hold'em DQN checkpoint")->check(CLI::ExistingFile);
  eval_all->add_option("--episodes", all_episodes, "DQN episodes when no checkpoint is given")->capture_default_str();

  // train-dqn
  std::string train_personality = "neutral", train_out;
  std::uint64_t train_seed = 0;
  long train_episodes = 3000;
  double beta = 0.25;
  auto* train = app.add_subcommand("train-dqn", "Train a personality-shaped Hold'em DQN opponent");
  train->add_option("--personality", train_personality, "neutral | aggressive | conservative")->capture_default_str();
  train->add_option("--seed", train_seed, "Seed")->capture_default_str();
  train->add_option("--episodes", train_episodes, "Training hands")->check(CLI::PositiveNumber)->capture_default_str();
  train->add_option("--beta", beta, "Shaping bonus")->capture_default_str();
  train->add_option("--out", train_out, "Checkpoint path (default: dqn-<personality>-<seed>.eqn)");

  // report
  std::string report_in = "runs", report_out = "report", report_model;
  auto* report = app.add_subcommand("report", "Aggregate session logs into a MetricReport");
  report->add_option("--in", report_in, "Directory of session logs")->check(CLI::ExistingDirectory)->capture_default_str();
  report->add_option("--out", report_out, "Output directory")->capture_default_str();
  report->add_option("--model", report_model, "Only this agent name");

  // serve
  std::string host = "127.0.0.1", serve_data = "arena-data";
  int port = 8080;
  bool no_auth = false;
  auto* serve = app.add_subcommand("serve", "Run the session service (token from EGOARENA_TOKEN)");
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "Port (0 = any free port)")->check(CLI::Range(0, 65535))->capture_default_str();
  serve->add_option("--data", serve_data, "Session storage directory")->capture_default_str();
  serve->add_flag("--no-auth", no_auth, "Accept requests without a token");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*convert) return cmd_convert(conv_in, conv_out, conv_report);

    if (*eval_static) {
      std::vector<ScenarioItem> items;
      for (const auto& p : jsonl_files(items_path)) {
        auto part = load_items(p);
        items.insert(items.end(), part.begin(), part.end());
      }
      auto client = llm::make_client(llm::load_agent_spec(st.agent));
      const auto log = run_mcq_eval(items, client, run_options(st));
      print_result(log, save(log, st));
      return 0;
    }

    if (*eval_guess) {
      auto client = llm::make_client(llm::load_agent_spec(gs.agent));
      const auto log = run_guess_session(client, level, rounds, gs.seed, run_options(gs));
      print_result(log, save(log, gs));
      const auto& r = *log.result;
      std::cout << "opponent: " << json_list(r["opponent_actions"]) << "\n";
      std::cout << "beliefs:  " << json_list(r["beliefs"]) << "\n";
      std::cout << "belief accuracy: " << r["belief_accuracy"].dump() << "\n";
      return 0;
    }

    if (*eval_holdem) {
      std::shared_ptr<dqn::QNetwork> net;
      std::string label;
      if (!opponent_ckpt.empty()) {
        auto ck = dqn::load_checkpoint(opponent_ckpt);
        label = "dqn-" + dqn::to_string(ck.config.personality);
        net = std::make_shared<dqn::QNetwork>(std::move(ck.network));
      } else {
        dqn::TrainConfig cfg;
        cfg.personality = dqn::personality_from_string(personality);
        cfg.episodes = holdem_episodes;
        cfg.seed = hs.seed;
        std::cerr << "training " << personality << " opponent (" << holdem_episodes << " episodes)\n";
        net = std::make_shared<dqn::QNetwork>(dqn::train_dqn(cfg).network);
        label = "dqn-" + personality;
      }
      DqnPolicy opp(net, label);
      auto client = llm::make_client(llm::load_agent_spec(hs.agent));
      const auto log = run_holdem_match(client, opp, {hands, hs.seed, mirrored}, run_options(hs));
      print_result(log, save(log, hs));
      return 0;
    }

    if (*eval_bj) {
      auto client = llm::make_client(llm::load_agent_spec(bs.agent));
      const auto log = run_blackjack(client, {bj_hands, bs.seed, true}, run_options(bs));
      print_result(log, save(log, bs));
      return 0;
    }

    if (*eval_bomb) {
      std::vector<std::string> specs = {bm.agent};
      for (const auto& t : teammates) specs.push_back(t);
      while (specs.size() < kBombTeamSize) specs.push_back(specs.back());
      std::vector<SessionLog> logs(maps.size());
      std::vector<std::function<void()>> jobs;
      for (std::size_t i = 0; i < maps.size(); ++i)
        jobs.push_back([&, i] {
          std::vector<llm::ChatClient> clients;
          for (const auto& s : specs) clients.push_back(llm::make_client(llm::load_agent_spec(s)));
          logs[i] = run_bomb_mission({&clients[0], &clients[1], &clients[2]}, load_bomb_map(maps[i]), run_options(bm));
        });
      run_jobs(jobs, bm.parallel);
      for (const auto& log : logs) print_result(log, save(log, bm));
      return 0;
    }

    if (*eval_dialogue) {
      const auto all_scenarios = load_dialogue_scenarios(scenarios);
      std::vector<SessionLog> logs(all_scenarios.size());
      std::vector<std::function<void()>> jobs;
      for (std::size_t i = 0; i < all_scenarios.size(); ++i)
        jobs.push_back([&, i] {
          auto a = llm::make_client(llm::load_agent_spec(dl.agent));
          auto b = llm::make_client(llm::load_agent_spec(partner.empty() ? dl.agent : partner));
          auto j = llm::make_client(llm::load_agent_spec(judge.empty() ? dl.agent : judge));
          logs[i] = run_dialogue(a, b, all_scenarios[i], &j, run_options(dl));
        });
      run_jobs(jobs, dl.parallel);
      for (const auto& log : logs) {
        const fs::path path = save(log, dl);
        std::cout << "dialogue " << log.session_id << " (" << log.result->at("end_reason").get<std::string>()
                  << ") scores " << log.result->at("scores").dump() << " -> " << path.string() << "\n";
      }
      return 0;
    }

    if (*eval_all) {
      PipelineConfig cfg;
      cfg.data_dir = data_dir;
      cfg.agent = llm::load_agent_spec(all.agent);
      if (!all_judge.empty()) cfg.judge = llm::load_agent_spec(all_judge);
      cfg.seed = all.seed;
      cfg.parallel = all.parallel;
      if (!opponent_ckpt.empty()) cfg.opponent_checkpoint = opponent_ckpt;
      cfg.dqn_episodes = all_episodes;
      const auto output = run_pipeline(cfg);
      write_pipeline_outputs(output, all.out);
      std::cout << output.logs.size() << " sessions -> " << (fs::path(all.out) / "runs").string() << "\n";
      std::cout << metrics::to_csv(output.report);
      return 0;
    }

    if (*train) {
      dqn::TrainConfig cfg;
      cfg.personality = dqn::personality_from_string(train_personality);
      cfg.seed = train_seed;
      cfg.episodes = train_episodes;
      cfg.shaping_bonus = beta;
      cfg.validate();
      if (train_out.empty()) train_out = "dqn-" + train_personality + "-" + std::to_string(train_seed) + ".eqn";
      auto result = dqn::train_dqn(cfg);
      dqn::save_checkpoint(train_out, {cfg, result.network});
      const auto share = dqn::evaluate_action_share(result.network, 1000, derive_seed(train_seed, 99));
      std::cout << "checkpoint -> " << train_out << "\n";
      std::cout << "gradient steps " << result.stats.gradient_steps << ", aggressive share over 1000 hands "
                << share.aggressive_share() << "\n";
      return 0;
    }

    if (*report) return cmd_report(report_in, report_out, report_model);

    if (*serve) {
      service::ServerOptions opts;
      opts.host = host;
      opts.port = port;
      if (!no_auth) {
        const char* tok = std::getenv("EGOARENA_TOKEN");
        if (!tok || !*tok) throw ConfigError("EGOARENA_TOKEN is not set (pass --no-auth to run without a token)");
        opts.token = tok;
      }
      service::SessionManager manager(serve_data);
      service::ArenaServer server(manager, opts);
      const int bound = server.bind();
      g_server = &server;
      std::signal(SIGINT, [](int) {
        if (auto* s = g_server.load()) s->stop();
      });
      std::signal(SIGTERM, [](int) {
        if (auto* s = g_server.load()) s->stop();
      });
      std::cout << "listening on http://" << host << ":" << bound << " (data: " << serve_data << ")" << std::endl;
      server.run();
      g_server = nullptr;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
