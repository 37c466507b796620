#include "egoarena/harness/runners.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "egoarena/core/digest.hpp"
#include "egoarena/core/error.hpp"
#include "egoarena/core/rng.hpp"
#include "egoarena/engines/holdem.hpp"
#include "egoarena/harness/io.hpp"
#include "egoarena/llm/parsers.hpp"
#include "egoarena/llm/prompts.hpp"
#include "egoarena/llm/providers.hpp"
#include "egoarena/metrics.hpp"

namespace egoarena {

using nlohmann::json;
using llm::ChatClient;
using llm::ChatMessage;

std::string make_session_id(const std::string& scenario, const std::string& key) {
  return scenario + "-" + fnv1a_hex(scenario + "\n" + key);
}

namespace {

// Sends one request and moves every attempt into the record. Provider
// failures are noted and returned as nullopt.
std::optional<std::string> ask(ChatClient& client, const std::vector<ChatMessage>& prompt, TurnRecord& record) {
  std::optional<std::string> reply;
  try {
    reply = client.complete(prompt);
  } catch (const ProviderError& e) {
    record.notes.push_back(std::string("provider error: ") + e.what());
  }
  auto ex = client.drain_exchanges();
  record.exchanges.insert(record.exchanges.end(), ex.begin(), ex.end());
  if (reply) record.raw_response = *reply;
  return reply;
}

struct Session {
  SessionLog log;
  Clock clock;

  Session(const std::string& scenario, const std::string& key, std::uint64_t seed, const RunOptions& opts)
      : clock(opts.wall_clock ? Clock::wall() : Clock::logical()) {
    log.scenario = scenario;
    log.session_id = opts.session_id.empty() ? make_session_id(scenario, key) : opts.session_id;
    log.seed = seed;
    log.started_at = clock.now();
  }

  SessionLog finish(json result) {
    log.result = std::move(result);
    log.finished_at = clock.now();
    return std::move(log);
  }
};

std::string guess_digest(const GuessState& s) {
  std::ostringstream out;
  out << "round=" << s.round << "/" << s.max_rounds << ";";
  for (const auto& r : s.history)
    out << (r.forfeit ? std::string("F") : std::to_string(r.agent_guess)) << "," << r.opponent_guess << "," << r.gold
        << "," << to_string(r.winner) << ";";
  return fnv1a_hex(out.str());
}

json percent_or_null(long num, long den) {
  if (den == 0) return nullptr;
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

// --- Multiple choice ---------------------------------------------------------

SessionLog run_mcq_eval(const std::vector<ScenarioItem>& items, ChatClient& agent, const RunOptions& opts) {
  if (items.empty()) throw InvalidArgument("run_mcq_eval needs at least one item");
  std::string key = agent.spec().name;
  json item_json = json::array();
  for (const auto& it : items) {
    it.validate();
    key += "|" + it.id;
    item_json.push_back(to_json(it));
  }
  Session s("mcq", key, 0, opts);
  s.log.agents = {agent.spec().to_json()};
  s.log.config = {{"items", item_json}, {"prompt_version", llm::kPromptVersion}};

  long correct = 0;
  std::map<std::string, std::pair<long, long>> by_kind;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& item = items[i];
    TurnRecord t;
    t.round = static_cast<int>(i) + 1;
    t.actor = agent.spec().name;
    t.prompt = llm::mcq_prompt(item);
    bool ok = false;
    if (auto reply = ask(agent, t.prompt, t)) {
      const auto p = llm::parse_mcq_choice(*reply, item.options);
      if (p.ok()) {
        t.parsed_action = llm::option_letter(*p.value);
        ok = *p.value == item.answer_index;
      } else {
        t.notes.push_back("unparsed answer, scored incorrect: " + p.error);
      }
    }
    if (ok) ++correct;
    auto& k = by_kind[to_string(item.scenario)];
    k.first += ok;
    k.second += 1;
    t.extra = {{"item_id", item.id},
               {"scenario", to_string(item.scenario)},
               {"gold", llm::option_letter(item.answer_index)},
               {"correct", ok}};
    s.log.turns.push_back(std::move(t));
  }
  json by = json::object();
  for (const auto& [kind, c] : by_kind)
    by[kind] = {{"correct", c.first}, {"total", c.second}, {"accuracy", percent_or_null(c.first, c.second)}};
  const long total = static_cast<long>(items.size());
  return s.finish({{"accuracy", percent_or_null(correct, total)},
                   {"correct", correct},
                   {"total", total},
                   {"by_scenario", by}});
}

// --- G0.8A ---------------------------------------------------------------------

SessionLog run_guess_session(ChatClient& agent, int level, int rounds, std::uint64_t seed, const RunOptions& opts) {
  if (rounds < 1) throw InvalidArgument("guess session needs at least one round");
  GuessOpponent opponent(level);
  Session s("guess", agent.spec().name + "|L" + std::to_string(level) + "|" + std::to_string(rounds) + "|" +
                         std::to_string(seed),
            seed, opts);
  s.log.agents = {agent.spec().to_json()};
  s.log.config = {{"level", level}, {"rounds", rounds}, {"prompt_version", llm::kPromptVersion}};

  GuessState state;
  state.max_rounds = rounds;
  while (!state.finished()) {
    TurnRecord t;
    t.round = state.round;
    t.actor = agent.spec().name;
    t.prompt = llm::guess_prompt(state);
    t.state_before = guess_digest(state);
    const double opp = round1(opponent.act(state.round, state.history));

    const auto reply = ask(agent, t.prompt, t);
    std::optional<double> belief;
    std::optional<int> guess;
    if (reply) {
      const auto b = llm::parse_belief(*reply);
      if (b.ok())
        belief = *b.value;
      else
        t.notes.push_back("belief missing: " + b.error);
      const auto g = llm::parse_number_guess(*reply);
      if (g.ok())
        guess = *g.value;
      else
        t.notes.push_back("guess forfeited: " + g.error);
    }
    if (guess) {
      state = guess_step(state, *guess, opp);
      t.parsed_action = std::to_string(*guess);
    } else {
      state = guess_forfeit(state, opp);
      t.parsed_action = "forfeit";
    }
    const auto& r = state.history.back();
    t.belief = BeliefRecord{t.round, belief, opp};
    t.state_after = guess_digest(state);
    t.extra = {{"agent_guess", guess ? json(*guess) : json(nullptr)},
               {"opponent_guess", r.opponent_guess},
               {"gold", r.gold},
               {"winner", to_string(r.winner)},
               {"forfeit", r.forfeit}};
    s.log.turns.push_back(std::move(t));
  }

  return s.finish(guess_result_payload(level, rounds, state, s.log.beliefs()));
}

json guess_result_payload(int level, int rounds, const GuessState& state, const std::vector<BeliefRecord>& beliefs) {
  int wins = 0, losses = 0, ties = 0, forfeits = 0;
  json opponent_actions = json::array();
  for (const auto& r : state.history) {
    wins += r.winner == GuessWinner::Agent;
    losses += r.winner == GuessWinner::Opponent;
    ties += r.winner == GuessWinner::Tie;
    forfeits += r.forfeit;
    opponent_actions.push_back(r.opponent_guess);
  }
  json predicted = json::array();
  for (const auto& b : beliefs) predicted.push_back(b.predicted ? json(*b.predicted) : json(nullptr));
  return {{"level", level},
          {"rounds", rounds},
          {"belief_accuracy", beliefs.empty() ? json(nullptr) : json(metrics::belief_accuracy(beliefs))},
          {"agent_wins", wins},
          {"opponent_wins", losses},
          {"ties", ties},
          {"forfeits", forfeits},
          {"opponent_actions", opponent_actions},
          {"beliefs", predicted}};
}

// --- Hold'em -----------------------------------------------------------------------

HoldemState holdem_match_deal(int h, std::uint64_t seed, bool mirrored) {
  if (!mirrored) return holdem_deal(derive_seed(seed, static_cast<std::uint64_t>(h)), h % 2);
  const HoldemState base = holdem_deal(derive_seed(seed, static_cast<std::uint64_t>(h / 2)), 0);
  return h % 2 == 0 ? base : holdem_mirror(base);
}

SessionLog run_holdem_match(ChatClient& agent, HoldemPolicy& opponent, const HoldemMatchOptions& match,
                            const RunOptions& opts) {
  if (match.n_hands < 1) throw InvalidArgument("holdem match needs at least one hand");
  Session s("holdem",
            agent.spec().name + "|" + opponent.name() + "|" + std::to_string(match.n_hands) + "|" +
                std::to_string(match.seed) + (match.mirrored ? "|m" : ""),
            match.seed, opts);
  s.log.agents = {agent.spec().to_json()};
  s.log.config = {{"n_hands", match.n_hands},
                  {"mirrored", match.mirrored},
                  {"opponent", opponent.name()},
                  {"prompt_version", llm::kPromptVersion}};

  long chips = 0;
  int won = 0, lost = 0, tied = 0, decisions = 0, scored = 0, correct = 0;
  for (int h = 0; h < match.n_hands; ++h) {
    HoldemState st = holdem_match_deal(h, match.seed, match.mirrored);
    std::optional<std::size_t> pending;  // agent turn awaiting the opponent's next action
    int predicted = -1;  // action code of the pending prediction, -1 when missing
    while (!st.terminal()) {
      TurnRecord t;
      t.round = h + 1;
      t.state_before = fnv1a_hex(st.serialize());
      const auto legal = holdem_legal_actions(st);
      const int seat = st.to_act;
      HoldemAction action = HoldemAction::Fold;
      if (seat == 0) {
        ++decisions;
        t.actor = agent.spec().name;
        t.prompt = llm::holdem_prompt(st, 0, h + 1, match.n_hands);
        predicted = -1;
        json prediction = nullptr;
        if (auto reply = ask(agent, t.prompt, t)) {
          const auto p = llm::parse_holdem_prediction(*reply);
          if (p.ok()) {
            predicted = static_cast<int>(*p.value);
            prediction = to_string(*p.value);
          } else {
            t.notes.push_back("prediction missing: " + p.error);
          }
          const auto a = llm::parse_holdem_action(*reply, legal);
          if (a.ok()) {
            action = *a.value;
          } else {
            action = llm::holdem_safe_default(legal);
            t.notes.push_back("substituted " + to_string(action) + ": " + a.error);
          }
        } else {
          action = llm::holdem_safe_default(legal);
          t.notes.push_back("substituted " + to_string(action) + " after provider failure");
        }
        t.extra = {{"hand", h + 1},
                   {"stage", to_string(st.stage)},
                   {"seat", 0},
                   {"prediction", prediction}};
        pending = s.log.turns.size();
      } else {
        t.actor = "opponent";
        action = opponent.act(st, seat);
        t.extra = {{"hand", h + 1}, {"stage", to_string(st.stage)}, {"seat", seat}};
        if (pending) {
          auto& at = s.log.turns[*pending];
          const bool ok = predicted == static_cast<int>(action);
          at.belief = BeliefRecord{h + 1,
                                   predicted >= 0 ? std::optional<double>(predicted) : std::nullopt,
                                   static_cast<double>(static_cast<int>(action))};
          at.extra["prediction_correct"] = ok;
          ++scored;
          correct += ok;
          pending.reset();
        }
      }
      t.parsed_action = to_string(action);
      st = holdem_step(st, action);
      t.state_after = fnv1a_hex(st.serialize());
      s.log.turns.push_back(std::move(t));
    }
    const int delta = st.payoffs()[0];
    chips += delta;
    if (delta > 0)
      ++won;
    else if (delta < 0)
      ++lost;
    else
      ++tied;
  }
  HoldemTally tally{match.n_hands, chips, won, lost, tied, decisions, scored, correct};
  return s.finish(holdem_result_payload(tally));
}

json holdem_result_payload(const HoldemTally& t) {
  return {{"hands", t.hands},
          {"agent_chips", t.chips},
          {"hands_won", t.won},
          {"hands_lost", t.lost},
          {"hands_tied", t.tied},
          {"win_rate", t.hands > 0 ? json(metrics::win_rate(t.won, t.tied, t.lost)) : json(nullptr)},
          {"decisions", t.decisions},
          {"predictions_scored", t.scored},
          {"predictions_correct", t.correct},
          {"prediction_accuracy", percent_or_null(t.correct, t.scored)}};
}

long holdem_duel(HoldemPolicy& a, HoldemPolicy& b, int n_pairs, std::uint64_t seed) {
  if (n_pairs < 1) throw InvalidArgument("holdem_duel needs at least one pair");
  long total = 0;
  for (int h = 0; h < 2 * n_pairs; ++h) {
    HoldemState st = holdem_match_deal(h, seed, true);
    while (!st.terminal()) st = holdem_step(st, st.to_act == 0 ? a.act(st, 0) : b.act(st, 1));
    total += st.payoffs()[0];
  }
  return total;
}

// --- Blackjack -----------------------------------------------------------------------

SessionLog run_blackjack(ChatClient& agent, const BlackjackRunOptions& run, const RunOptions& opts) {
  if (run.n_hands < 1) throw InvalidArgument("blackjack run needs at least one hand");
  Session s("blackjack", agent.spec().name + "|" + std::to_string(run.n_hands) + "|" + std::to_string(run.seed),
            run.seed, opts);
  s.log.agents = {agent.spec().to_json()};
  s.log.config = {{"n_hands", run.n_hands},
                  {"record_turns", run.record_turns},
                  {"prompt_version", llm::kPromptVersion}};

  BlackjackTally tally;
  for (int h = 0; h < run.n_hands; ++h) {
    BlackjackState st = blackjack_deal(derive_seed(run.seed, static_cast<std::uint64_t>(h)));
    while (st.phase == BlackjackPhase::PlayerTurn) {
      TurnRecord t;
      t.round = h + 1;
      t.actor = agent.spec().name;
      t.prompt = llm::blackjack_prompt(st, h + 1, run.n_hands);
      t.state_before = fnv1a_hex(st.serialize());
      BlackjackAction action = llm::kBlackjackSafeDefault;
      if (auto reply = ask(agent, t.prompt, t)) {
        const auto a = llm::parse_blackjack_action(*reply);
        if (a.ok())
          action = *a.value;
        else
          t.notes.push_back("substituted stand: " + a.error);
      } else {
        t.notes.push_back("substituted stand after provider failure");
      }
      t.parsed_action = to_string(action);
      st = blackjack_step(st, action);
      t.state_after = fnv1a_hex(st.serialize());
      if (st.outcome) t.extra = {{"outcome", to_string(*st.outcome)}};
      if (run.record_turns) s.log.turns.push_back(std::move(t));
    }
    switch (*st.outcome) {
      case BlackjackOutcome::Win: ++tally.wins; break;
      case BlackjackOutcome::Tie: ++tally.ties; break;
      case BlackjackOutcome::Lose: ++tally.losses; break;
    }
  }
  return s.finish(blackjack_result_payload(tally));
}

json blackjack_result_payload(const BlackjackTally& t) {
  const long hands = t.wins + t.ties + t.losses;
  return {{"hands", hands},
          {"wins", t.wins},
          {"ties", t.ties},
          {"losses", t.losses},
          {"win_rate", hands > 0 ? json(metrics::win_rate(t.wins, t.ties, t.losses)) : json(nullptr)}};
}

BlackjackTally play_blackjack_policy(const std::function<BlackjackAction(const BlackjackState&)>& policy,
                                     int n_hands, std::uint64_t seed) {
  if (n_hands < 1) throw InvalidArgument("blackjack run needs at least one hand");
  BlackjackTally tally;
  for (int h = 0; h < n_hands; ++h) {
    BlackjackState st = blackjack_deal(derive_seed(seed, static_cast<std::uint64_t>(h)));
    while (st.phase == BlackjackPhase::PlayerTurn) st = blackjack_step(st, policy(st));
    switch (*st.outcome) {
      case BlackjackOutcome::Win: ++tally.wins; break;
      case BlackjackOutcome::Tie: ++tally.ties; break;
      case BlackjackOutcome::Lose: ++tally.losses; break;
    }
  }
  return tally;
}

// --- Bomb defusal -----------------------------------------------------------------------

SessionLog run_bomb_mission(const std::array<ChatClient*, kBombTeamSize>& agents, const BombMap& initial,
                            const RunOptions& opts) {
  validate_bomb_map(initial);
  for (auto* a : agents)
    if (!a) throw InvalidArgument("bomb mission needs three agents");
  std::string key = initial.serialize();
  for (auto* a : agents) key += "|" + a->spec().name;
  Session s("bomb", key, 0, opts);
  for (auto* a : agents) s.log.agents.push_back(a->spec().to_json());
  s.log.config = {{"map", to_json(initial)}, {"prompt_version", llm::kPromptVersion}};

  BombMap map = initial;
  auto all_defused = [&] {
    return std::all_of(map.bombs.begin(), map.bombs.end(), [](const Bomb& b) { return b.defused(); });
  };
  std::array<std::vector<llm::TeamMessage>, kBombTeamSize> inbox;
  while (!map.finished() && !all_defused()) {
    const std::string before = fnv1a_hex(map.serialize());
    std::array<BombAction, kBombTeamSize> actions;
    std::array<TurnRecord, kBombTeamSize> records;
    std::array<std::string, kBombTeamSize> sent;
    for (int i = 0; i < kBombTeamSize; ++i) {
      TurnRecord& t = records[i];
      t.round = map.round;
      t.actor = map.agents[i].name;
      t.prompt = llm::bomb_prompt(map, i, inbox[i]);
      t.state_before = before;
      std::string action_text = "wait";
      if (auto reply = ask(*agents[i], t.prompt, t)) {
        if (auto m = llm::labelled_line(*reply, "message")) {
          std::string lowered = *m;
          std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
          if (!m->empty() && lowered != "none") sent[i] = *m;
        }
        action_text = llm::labelled_line(*reply, "action").value_or(*reply);
      }
      const auto parsed = parse_bomb_action(action_text, map);
      if (parsed.warning) t.notes.push_back(*parsed.warning);
      actions[i] = parsed.action;
      t.parsed_action = to_string(parsed.action, map);
      t.extra = {{"message", sent[i]}};
    }
    const auto step = bomb_step(map, actions);
    for (const auto& note : step.notes) {
      int owner = 0;
      for (int i = 0; i < kBombTeamSize; ++i)
        if (note.rfind(map.agents[i].name + " ", 0) == 0) owner = i;
      records[owner].notes.push_back(note);
    }
    map = step.state;
    for (auto& t : records) {
      t.state_after = fnv1a_hex(map.serialize());
      t.extra["round_points"] = step.points;
      t.extra["score"] = map.score;
      s.log.turns.push_back(std::move(t));
    }
    for (int i = 0; i < kBombTeamSize; ++i) {
      inbox[i].clear();
      for (int j = 0; j < kBombTeamSize; ++j)
        if (j != i && !sent[j].empty()) inbox[i].push_back({map.agents[j].name, sent[j]});
    }
  }
  int defused = 0;
  for (const auto& b : map.bombs) defused += b.defused();
  const int max_points = bomb_max_score(map);
  return s.finish({{"map", map.name},
                   {"points", map.score},
                   {"max_points", max_points},
                   {"team_score", metrics::team_score(map.score, max_points)},
                   {"rounds_played", map.round - 1},
                   {"defused", defused}});
}

// --- Dialogue --------------------------------------------------------------------------

JudgeOutcome judge_goal_completion(const Transcript& transcript, const DialogueScenario& scenario,
                                   ChatClient& judge) {
  if (transcript.turns.empty()) throw InvalidArgument("cannot judge an empty transcript");
  JudgeOutcome out;
  for (int c = 0; c < 2; ++c) {
    TurnRecord t;
    t.round = c + 1;
    t.actor = "judge";
    t.prompt = llm::judge_prompt(scenario, c, transcript);
    std::optional<int> score;
    if (auto reply = ask(judge, t.prompt, t)) {
      auto p = llm::parse_judge_score(*reply);
      if (p.ok()) {
        score = *p.value;
      } else {
        t.notes.push_back("unparsed judge reply, re-asking: " + p.error);
        auto retry = t.prompt;
        retry.push_back(llm::assistant_message(*reply));
        retry.push_back(llm::judge_reask());
        if (auto again = ask(judge, retry, t)) {
          p = llm::parse_judge_score(*again);
          if (p.ok())
            score = *p.value;
          else
            t.notes.push_back("unscored after re-ask: " + p.error);
        }
      }
    }
    t.parsed_action = score ? std::to_string(*score) : "unscored";
    t.extra = {{"character", scenario.characters[c].name}, {"score", score ? json(*score) : json(nullptr)}};
    out.scores[c] = score;
    out.records.push_back(std::move(t));
  }
  return out;
}

SessionLog run_dialogue(ChatClient& a, ChatClient& b, const DialogueScenario& scenario, ChatClient* judge,
                        const RunOptions& opts) {
  scenario.validate();
  std::string key = scenario.id + "|" + a.spec().name + "|" + b.spec().name;
  if (judge) key += "|" + judge->spec().name;
  Session s("dialogue", key, 0, opts);
  s.log.agents = {a.spec().to_json(), b.spec().to_json()};
  if (judge) s.log.agents.push_back(judge->spec().to_json());
  s.log.config = {{"scenario", to_json(scenario)}, {"judge", judge != nullptr}, {"prompt_version", llm::kPromptVersion}};

  std::array<ChatClient*, 2> clients = {&a, &b};
  Transcript tr;
  tr.scenario_id = scenario.id;
  tr.participants = {a.spec().name, b.spec().name};
  std::array<bool, 2> left{};
  int speaker = 0;
  for (int turn = 1; turn <= scenario.max_turns; ++turn) {
    if (left[speaker]) speaker = 1 - speaker;
    TurnRecord t;
    t.round = turn;
    t.actor = scenario.characters[speaker].name;
    t.prompt = llm::dialogue_prompt(scenario, speaker, tr.turns);
    const auto reply = ask(*clients[speaker], t.prompt, t);
    if (!reply) {
      tr.end_reason = "provider_error";
      s.log.turns.push_back(std::move(t));
      break;
    }
    if (reply->find(llm::kLeaveToken) != std::string::npos) left[speaker] = true;
    tr.turns.push_back({turn, speaker, scenario.characters[speaker].name, *reply});
    t.parsed_action = left[speaker] ? "leave" : "say";
    t.extra = {{"speaker", speaker}};
    s.log.turns.push_back(std::move(t));
    if (left[0] && left[1]) {
      tr.end_reason = "both_left";
      break;
    }
    speaker = 1 - speaker;
  }
  if (tr.end_reason.empty()) tr.end_reason = "max_turns";

  std::array<std::optional<int>, 2> scores{};
  if (judge && !tr.turns.empty()) {
    auto verdict = judge_goal_completion(tr, scenario, *judge);
    scores = verdict.scores;
    for (auto& r : verdict.records) s.log.turns.push_back(std::move(r));
  }
  return s.finish(dialogue_result_payload(tr, scores));
}

json dialogue_result_payload(const Transcript& t, const std::array<std::optional<int>, 2>& scores) {
  json sc = json::array();
  for (const auto& v : scores) sc.push_back(v ? json(*v) : json(nullptr));
  return {{"transcript", to_json(t)}, {"scores", sc}, {"end_reason", t.end_reason}};
}

Transcript transcript_of(const SessionLog& log) {
  if (log.scenario != "dialogue" || !log.result) throw InvalidArgument("not a finished dialogue log");
  return transcript_from_json(log.result->at("transcript"));
}

// --- Replay ------------------------------------------------------------------------------

namespace {

// A client whose provider returns `actor`'s recorded attempts in order.
ChatClient replay_client(const SessionLog& log, const std::string& actor, const json& spec_json) {
  std::vector<llm::ScriptedProvider::Step> steps;
  for (const auto& t : log.turns) {
    if (t.actor != actor) continue;
    for (const auto& e : t.exchanges)
      if (e.ok)
        steps.push_back({e.response, 0, false, {}});
      else
        steps.push_back({{}, e.status, !e.transient, e.error.empty() ? "failed" : e.error});
  }
  llm::AgentSpec spec;
  spec.name = spec_json.value("name", actor);
  spec.provider = "stub";
  if (spec_json.contains("retry")) {
    spec.retry.max_attempts = spec_json["retry"].value("max_attempts", 3);
  }
  spec.retry.backoff_ms = 0;
  return ChatClient(spec, std::make_shared<llm::ScriptedProvider>(std::move(steps)), [](int) {});
}

RunOptions same_id(const SessionLog& log) {
  RunOptions o;
  o.session_id = log.session_id;
  return o;
}

}  // namespace

SessionLog replay_session(const SessionLog& log) {
  if (log.agents.empty()) throw InvalidArgument("session log lists no agents");
  const auto& first = log.agents.front();
  const auto opts = same_id(log);
  if (log.scenario == "mcq") {
    std::vector<ScenarioItem> items;
    for (const auto& j : log.config.at("items")) items.push_back(scenario_item_from_json(j));
    auto c = replay_client(log, first.at("name").get<std::string>(), first);
    return run_mcq_eval(items, c, opts);
  }
  if (log.scenario == "guess") {
    auto c = replay_client(log, first.at("name").get<std::string>(), first);
    return run_guess_session(c, log.config.at("level").get<int>(), log.config.at("rounds").get<int>(), log.seed, opts);
  }
  if (log.scenario == "holdem") {
    auto c = replay_client(log, first.at("name").get<std::string>(), first);
    std::vector<HoldemAction> script;
    for (const auto& t : log.turns)
      if (t.actor == "opponent") script.push_back(*holdem_action_from_string(t.parsed_action));
    ScriptedHoldemPolicy opponent(std::move(script));
    HoldemMatchOptions m{log.config.at("n_hands").get<int>(), log.seed, log.config.at("mirrored").get<bool>()};
    auto replayed = run_holdem_match(c, opponent, m, opts);
    replayed.config["opponent"] = log.config.at("opponent");
    return replayed;
  }
  if (log.scenario == "blackjack") {
    auto c = replay_client(log, first.at("name").get<std::string>(), first);
    BlackjackRunOptions r{log.config.at("n_hands").get<int>(), log.seed, log.config.at("record_turns").get<bool>()};
    if (!r.record_turns) throw InvalidArgument("blackjack log was written without turns and cannot be replayed");
    return run_blackjack(c, r, opts);
  }
  if (log.scenario == "bomb") {
    const BombMap map = bomb_map_from_json(log.config.at("map"));
    std::vector<ChatClient> clients;
    for (int i = 0; i < kBombTeamSize; ++i) clients.push_back(replay_client(log, map.agents[i].name, log.agents.at(i)));
    return run_bomb_mission({&clients[0], &clients[1], &clients[2]}, map, opts);
  }
  if (log.scenario == "dialogue") {
    const auto scenario = dialogue_scenario_from_json(log.config.at("scenario"));
    auto a = replay_client(log, scenario.characters[0].name, log.agents.at(0));
    auto b = replay_client(log, scenario.characters[1].name, log.agents.at(1));
    if (log.config.at("judge").get<bool>()) {
      auto j = replay_client(log, "judge", log.agents.at(2));
      return run_dialogue(a, b, scenario, &j, opts);
    }
    return run_dialogue(a, b, scenario, nullptr, opts);
  }
  throw InvalidArgument("cannot replay scenario '" + log.scenario + "'");
}

}  // namespace egoarena
