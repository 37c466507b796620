#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "egoarena/engines/blackjack.hpp"
#include "egoarena/engines/bomb.hpp"
#include "egoarena/engines/guess.hpp"
#include "egoarena/harness/session_log.hpp"
#include "egoarena/harness/types.hpp"
#include "egoarena/llm/chat.hpp"
#include "egoarena/opponents.hpp"

namespace egoarena {

struct RunOptions {
  bool wall_clock = false;  // logical timestamps otherwise
  std::string session_id;   // derived from scenario, agent and seed when empty
};

// Deterministic id: "<scenario>-<16 hex digits>" from a hash of the parts.
std::string make_session_id(const std::string& scenario, const std::string& key);

// --- Multiple choice -----------------------------------------------------
// One completion per item with the item's own system message. A provider
// failure or an unparseable reply marks the item incorrect.
// Result: accuracy (percent), correct, total, by_scenario{kind: {correct, total, accuracy}}.
SessionLog run_mcq_eval(const std::vector<ScenarioItem>& items, llm::ChatClient& agent, const RunOptions& opts = {});

// --- G0.8A -----------------------------------------------------------------
// Each round the agent sees the full history, states a belief and a guess.
// An unusable guess forfeits the round; a missing belief is recorded as
// missing. Result: level, belief_accuracy, agent_wins, opponent_wins, ties,
// forfeits, opponent_actions, beliefs.
SessionLog run_guess_session(llm::ChatClient& agent, int level, int rounds, std::uint64_t seed,
                             const RunOptions& opts = {});

// --- Hold'em ---------------------------------------------------------------
struct HoldemMatchOptions {
  int n_hands = 50;
  std::uint64_t seed = 0;
  // Hands come in pairs: the second replays the first deal with hole cards
  // and button exchanged.
  bool mirrored = false;
};

// The agent sits in seat 0. Without mirroring the button alternates and hand
// h is dealt from derive_seed(seed, h). Before each of its actions the agent
// predicts the opponent's next action; a prediction is scored when the
// opponent acts again in the same hand. Unparseable actions fall back to
// Check if legal, else Fold.
// Result: hands, agent_chips, hands_won/lost/tied, win_rate, decisions,
// predictions_scored, predictions_correct, prediction_accuracy (percent).
SessionLog run_holdem_match(llm::ChatClient& agent, HoldemPolicy& opponent, const HoldemMatchOptions& match,
                            const RunOptions& opts = {});

// Deal for hand h (0-based) of a match, per the schedule above.
HoldemState holdem_match_deal(int h, std::uint64_t seed, bool mirrored);

// Policy against policy on the same hand schedule as a mirrored match.
// Returns the chip total won by `a` over `n_pairs` deal/mirror pairs.
long holdem_duel(HoldemPolicy& a, HoldemPolicy& b, int n_pairs, std::uint64_t seed);

// --- Blackjack ---------------------------------------------------------------
struct BlackjackRunOptions {
  int n_hands = 300;
  std::uint64_t seed = 0;
  bool record_turns = true;  // large batches may keep only the result
};

// Hand h is dealt from derive_seed(seed, h). Unparseable replies stand.
// Result: hands, wins, ties, losses, win_rate.
SessionLog run_blackjack(llm::ChatClient& agent, const BlackjackRunOptions& run, const RunOptions& opts = {});

struct BlackjackTally {
  long wins = 0, ties = 0, losses = 0;
};

// Same deals as run_blackjack, decided by a plain function.
BlackjackTally play_blackjack_policy(const std::function<BlackjackAction(const BlackjackState&)>& policy,
                                     int n_hands, std::uint64_t seed);

// --- Bomb defusal ------------------------------------------------------------
// agents[i] plays map.agents[i]. Every round each agent sees its observation
// and the messages its teammates sent the previous round, then replies with a
// message and an action. Ends after max_rounds or when every bomb is defused.
// Result: map, points, max_points, team_score, rounds_played, defused.
SessionLog run_bomb_mission(const std::array<llm::ChatClient*, kBombTeamSize>& agents, const BombMap& map,
                            const RunOptions& opts = {});

// --- Dialogue ----------------------------------------------------------------
// Characters speak alternately, character 0 first. A character that includes
// the leave token stops speaking; the dialogue ends when both have left, after
// max_turns messages, or on a provider failure (partial transcript kept).
// With a judge, each character's goal completion is scored afterwards.
// Result: transcript, scores [s0, s1] (null = unscored).
SessionLog run_dialogue(llm::ChatClient& a, llm::ChatClient& b, const DialogueScenario& scenario,
                        llm::ChatClient* judge = nullptr, const RunOptions& opts = {});

struct JudgeOutcome {
  std::array<std::optional<int>, 2> scores;
  std::vector<TurnRecord> records;
};

// Scores both characters 0..10. An unparseable reply gets one re-ask, then the
// character is unscored.
JudgeOutcome judge_goal_completion(const Transcript& transcript, const DialogueScenario& scenario,
                                   llm::ChatClient& judge);

Transcript transcript_of(const SessionLog& log);

// --- Result payloads ---------------------------------------------------------
// Shared by the runners and the session service so both write the same schema.
nlohmann::json guess_result_payload(int level, int rounds, const GuessState& state,
                                    const std::vector<BeliefRecord>& beliefs);

struct HoldemTally {
  int hands = 0;
  long chips = 0;  // seat 0
  int won = 0, lost = 0, tied = 0;
  int decisions = 0, scored = 0, correct = 0;
};
nlohmann::json holdem_result_payload(const HoldemTally& t);
nlohmann::json blackjack_result_payload(const BlackjackTally& t);
nlohmann::json dialogue_result_payload(const Transcript& t, const std::array<std::optional<int>, 2>& scores);

// --- Replay ------------------------------------------------------------------
// Re-runs a logged session with every actor's recorded replies fed back
// through scripted providers (and recorded opponent Hold'em actions replayed).
// For a complete log the replayed result payload equals the recorded one.
SessionLog replay_session(const SessionLog& log);

}  // namespace egoarena
