#include "games.hpp"

#include <algorithm>

#include "egoarena/core/digest.hpp"
#include "egoarena/core/rng.hpp"
#include "egoarena/engines/blackjack.hpp"
#include "egoarena/engines/guess.hpp"
#include "egoarena/engines/holdem.hpp"
#include "egoarena/harness/runners.hpp"
#include "egoarena/harness/types.hpp"
#include "egoarena/llm/agent_config.hpp"
#include "egoarena/llm/parsers.hpp"
#include "egoarena/llm/prompts.hpp"
#include "egoarena/llm/providers.hpp"
#include "egoarena/opponents.hpp"
#include "egoarena/service/manager.hpp"

namespace egoarena::service {

using nlohmann::json;

json Slot::describe() const {
  if (type == "agent") {
    json j = client->spec().to_json();
    j["participant"] = name;
    return j;
  }
  if (type == "policy") return {{"name", policy}, {"provider", "policy"}, {"participant", name}};
  return {{"name", "human"}, {"provider", "human"}, {"participant", name}};
}

namespace {

// Sends one agent request; provider failures become notes and nullopt.
std::optional<std::string> ask(llm::ChatClient& client, const std::vector<llm::ChatMessage>& prompt, TurnRecord& pre) {
  pre.prompt = prompt;
  std::optional<std::string> reply;
  try {
    reply = client.complete(prompt);
  } catch (const ProviderError& e) {
    pre.notes.push_back(std::string("provider error: ") + e.what());
  }
  auto ex = client.drain_exchanges();
  pre.exchanges.insert(pre.exchanges.end(), ex.begin(), ex.end());
  if (reply) pre.raw_response = *reply;
  return reply;
}

TurnRecord start_record(const Slot& slot, bool automated, const json& action, const TurnRecord& pre) {
  TurnRecord t = pre;
  t.actor = slot.name;
  if (!automated) t.raw_response = action.dump();
  return t;
}

void check_turn(const Game& g, int slot) {
  if (g.finished()) throw ServiceError(409, "session is finished");
  const auto who = g.to_act();
  if (!who || *who != slot)
    throw ServiceError(409, "not your turn", {{"to_act", who ? json(g.slots[*who].name) : json(nullptr)}});
}

json cards_json(const std::vector<Card>& cards) {
  json out = json::array();
  for (const auto& c : cards) out.push_back(to_string(c));
  return out;
}

int int_field(const json& cfg, const char* key, int def, int lo, int hi, json& errors) {
  if (!cfg.contains(key)) return def;
  const auto& v = cfg[key];
  if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi) {
    errors[key] = "must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    return def;
  }
  return v.get<int>();
}

// --- G0.8A -----------------------------------------------------------------

class GuessGame : public Game {
 public:
  GuessGame(int level, int rounds) : level_(level), rounds_(rounds), opponent_(level) { state_.max_rounds = rounds; }

  std::string scenario() const override { return "guess"; }
  json config() const override { return {{"level", level_}, {"rounds", rounds_}}; }
  std::optional<int> to_act() const override { return finished() ? std::nullopt : std::optional<int>(0); }
  bool finished() const override { return state_.finished(); }

  json view(std::optional<int>) const override {
    json history = json::array();
    for (std::size_t i = 0; i < state_.history.size(); ++i) {
      const auto& r = state_.history[i];
      history.push_back({{"round", i + 1},
                         {"your_guess", r.forfeit ? json(nullptr) : json(r.agent_guess)},
                         {"opponent_guess", r.opponent_guess},
                         {"gold", r.gold},
                         {"winner", to_string(r.winner)},
                         {"forfeit", r.forfeit}});
    }
    json v = {{"level", level_}, {"round", std::min(state_.round, rounds_)}, {"max_rounds", rounds_},
              {"history", history}};
    if (!finished()) v["legal"] = {{"guess", {{"min", kGuessMin}, {"max", kGuessMax}}}, {"belief", "number"}};
    return v;
  }

  EventList apply(int slot, const json& action, bool automated, const TurnRecord& pre) override {
    check_turn(*this, slot);
    if (!action.is_object()) throw ServiceError(422, "action must be an object");
    std::optional<int> guess;
    const json g = action.value("guess", json(nullptr));
    if (g.is_number_integer() && g.get<long long>() >= kGuessMin && g.get<long long>() <= kGuessMax)
      guess = g.get<int>();
    else if (!(automated && g.is_null()))
      throw ServiceError(422, "guess must be an integer between 1 and 100", {{"legal", {{"min", 1}, {"max", 100}}}});
    std::optional<double> belief;
    const json b = action.value("belief", json(nullptr));
    if (b.is_number())
      belief = round1(b.get<double>());
    else if (!b.is_null())
      throw ServiceError(422, "belief must be a number");

    TurnRecord t = start_record(slots[0], automated, action, pre);
    t.round = state_.round;
    t.state_before = digest();
    const double opp = round1(opponent_.act(state_.round, state_.history));
    state_ = guess ? guess_step(state_, *guess, opp) : guess_forfeit(state_, opp);
    const auto& r = state_.history.back();
    t.parsed_action = guess ? std::to_string(*guess) : "forfeit";
    t.belief = BeliefRecord{t.round, belief, opp};
    t.state_after = digest();
    t.extra = {{"agent_guess", guess ? json(*guess) : json(nullptr)},
               {"opponent_guess", r.opponent_guess},
               {"gold", r.gold},
               {"winner", to_string(r.winner)},
               {"forfeit", r.forfeit}};
    turns.push_back(t);
    return {{"round",
             {{"round", t.round},
              {"guess", guess ? json(*guess) : json(nullptr)},
              {"belief", belief ? json(*belief) : json(nullptr)},
              {"opponent_guess", r.opponent_guess},
              {"gold", r.gold},
              {"winner", to_string(r.winner)}}}};
  }

  json automated_action(int slot, TurnRecord& pre) override {
    json action = {{"guess", nullptr}, {"belief", nullptr}};
    if (auto reply = ask(*slots[slot].client, llm::guess_prompt(state_), pre)) {
      const auto b = llm::parse_belief(*reply);
      if (b.ok())
        action["belief"] = *b.value;
      else
        pre.notes.push_back("belief missing: " + b.error);
      const auto g = llm::parse_number_guess(*reply);
      if (g.ok())
        action["guess"] = *g.value;
      else
        pre.notes.push_back("guess forfeited: " + g.error);
    }
    return action;
  }

  json result() const override {
    std::vector<BeliefRecord> beliefs;
    for (const auto& t : turns)
      if (t.belief) beliefs.push_back(*t.belief);
    return guess_result_payload(level_, rounds_, state_, beliefs);
  }

 private:
  std::string digest() const {
    json h = json::array();
    for (const auto& r : state_.history) h.push_back({r.agent_guess, r.opponent_guess, r.gold, r.forfeit});
    return fnv1a_hex(std::to_string(state_.round) + h.dump());
  }

  int level_;
  int rounds_;
  GuessOpponent opponent_;
  GuessState state_;
};

// --- Blackjack ---------------------------------------------------------------

class BlackjackGame : public Game {
 public:
  BlackjackGame(int n_hands, std::uint64_t seed) : n_hands_(n_hands), seed_(seed) { deal(); }

  std::string scenario() const override { return "blackjack"; }
  json config() const override { return {{"n_hands", n_hands_}}; }
  std::optional<int> to_act() const override { return finished() ? std::nullopt : std::optional<int>(0); }
  bool finished() const override { return hand_ >= n_hands_; }

  json view(std::optional<int>) const override {
    json v = {{"hand", std::min(hand_ + 1, n_hands_)},
              {"n_hands", n_hands_},
              {"tally", {{"wins", tally_.wins}, {"ties", tally_.ties}, {"losses", tally_.losses}}},
              {"last_hand", last_hand_}};
    if (!finished()) {
      const auto value = blackjack_hand_value(state_.player_hand);
      v["your_cards"] = cards_json(state_.player_hand);
      v["your_value"] = value.value;
      v["soft"] = value.soft;
      v["dealer_upcard"] = to_string(state_.dealer_upcard);
      v["legal"] = {"hit", "stand"};
    }
    return v;
  }

  EventList apply(int slot, const json& action, bool automated, const TurnRecord& pre) override {
    check_turn(*this, slot);
    const std::string move = action.is_object() ? action.value("move", "") : "";
    if (move != "hit" && move != "stand")
      throw ServiceError(422, "move must be hit or stand", {{"legal", {"hit", "stand"}}});
    TurnRecord t = start_record(slots[0], automated, action, pre);
    t.round = hand_ + 1;
    t.state_before = fnv1a_hex(state_.serialize());
    state_ = blackjack_step(state_, move == "hit" ? BlackjackAction::Hit : BlackjackAction::Stand);
    t.parsed_action = move;
    t.state_after = fnv1a_hex(state_.serialize());
    EventList events = {{"action", {{"hand", hand_ + 1}, {"move", move}, {"your_cards", cards_json(state_.player_hand)}}}};
    if (state_.outcome) {
      t.extra = {{"outcome", to_string(*state_.outcome)}};
      switch (*state_.outcome) {
        case BlackjackOutcome::Win: ++tally_.wins; break;
        case BlackjackOutcome::Tie: ++tally_.ties; break;
        case BlackjackOutcome::Lose: ++tally_.losses; break;
      }
      last_hand_ = {{"hand", hand_ + 1},
                    {"your_cards", cards_json(state_.player_hand)},
                    {"dealer_cards", cards_json(state_.dealer_hand())},
                    {"outcome", to_string(*state_.outcome)}};
      events.push_back({"hand_end", last_hand_});
      ++hand_;
      if (!finished()) deal();
    }
    turns.push_back(std::move(t));
    return events;
  }

  json automated_action(int slot, TurnRecord& pre) override {
    BlackjackAction a = llm::kBlackjackSafeDefault;
    if (auto reply = ask(*slots[slot].client, llm::blackjack_prompt(state_, hand_ + 1, n_hands_), pre)) {
      const auto p = llm::parse_blackjack_action(*reply);
      if (p.ok())
        a = *p.value;
      else
        pre.notes.push_back("substituted stand: " + p.error);
    }
    return {{"move", to_string(a)}};
  }

  json result() const override { return blackjack_result_payload(tally_); }

 private:
  void deal() { state_ = blackjack_deal(derive_seed(seed_, static_cast<std::uint64_t>(hand_))); }

  int n_hands_;
  std::uint64_t seed_;
  int hand_ = 0;
  BlackjackState state_;
  BlackjackTally tally_;
  json last_hand_ = nullptr;
};

// --- Hold'em -------------------------------------------------------------------

class HoldemGame : public Game {
 public:
  HoldemGame(int n_hands, bool mirrored, std::uint64_t seed)
      : n_hands_(n_hands), mirrored_(mirrored), seed_(seed) {
    state_ = holdem_match_deal(0, seed_, mirrored_);
  }

  std::string scenario() const override { return "holdem"; }
  json config() const override { return {{"n_hands", n_hands_}, {"mirrored", mirrored_}}; }
  std::optional<int> to_act() const override { return finished() ? std::nullopt : std::optional<int>(state_.to_act); }
  bool finished() const override { return hand_ >= n_hands_; }

  EventList opening_events() const override { return {{"hand_start", {{"hand", 1}, {"button", state_.button}}}}; }

  json view(std::optional<int> slot) const override {
    json v = {{"hand", std::min(hand_ + 1, n_hands_)},
              {"n_hands", n_hands_},
              {"chips", {chips_[0], chips_[1]}},
              {"last_hand", last_hand_}};
    if (slot) v["seat"] = *slot;
    if (!finished()) {
      json history = json::array();
      for (const auto& e : state_.history)
        history.push_back({{"seat", e.player}, {"stage", to_string(e.stage)}, {"action", to_string(e.action)}});
      v["button"] = state_.button;
      v["stage"] = to_string(state_.stage);
      v["community"] = cards_json(state_.community);
      v["pot"] = state_.pot;
      v["stacks"] = {state_.stacks[0], state_.stacks[1]};
      v["committed"] = {state_.committed[0], state_.committed[1]};
      v["history"] = history;
      if (slot) {
        v["your_cards"] = cards_json({state_.hands[*slot][0], state_.hands[*slot][1]});
        if (state_.to_act == *slot) {
          json legal = json::array();
          for (auto a : holdem_legal_actions(state_).to_vector()) legal.push_back(to_string(a));
          v["legal"] = legal;
        }
      }
    }
    return v;
  }

  EventList apply(int slot, const json& action, bool automated, const TurnRecord& pre) override {
    check_turn(*this, slot);
    const auto legal = holdem_legal_actions(state_);
    json legal_names = json::array();
    for (auto a : legal.to_vector()) legal_names.push_back(to_string(a));
    const std::string move = action.is_object() ? action.value("move", "") : "";
    const auto a = holdem_action_from_string(move);
    if (!a || !legal.contains(*a))
      throw ServiceError(422, "illegal action '" + move + "'", {{"legal", legal_names}});
    int predicted = -1;
    if (action.contains("prediction") && !action["prediction"].is_null()) {
      const auto p = action["prediction"].is_string() ? holdem_action_from_string(action["prediction"]) : std::nullopt;
      if (!p) throw ServiceError(422, "prediction must be fold, check, call or raise");
      predicted = static_cast<int>(*p);
    }

    TurnRecord t = start_record(slots[slot], automated, action, pre);
    t.round = hand_ + 1;
    t.state_before = fnv1a_hex(state_.serialize());
    t.parsed_action = to_string(*a);
    t.extra = {{"hand", hand_ + 1}, {"stage", to_string(state_.stage)}, {"seat", slot}};
    if (slots[slot].type != "policy")
      t.extra["prediction"] = predicted >= 0 ? json(to_string(static_cast<HoldemAction>(predicted))) : json(nullptr);

    // The other seat's pending prediction is scored by this action.
    const int other = 1 - slot;
    if (pending_[other]) {
      auto& at = turns[*pending_[other]];
      const int p = pending_pred_[other];
      const bool ok = p == static_cast<int>(*a);
      at.belief = BeliefRecord{hand_ + 1, p >= 0 ? std::optional<double>(p) : std::nullopt,
                               static_cast<double>(static_cast<int>(*a))};
      at.extra["prediction_correct"] = ok;
      if (other == 0) {
        ++tally_.scored;
        tally_.correct += ok;
      }
      pending_[other].reset();
    }
    if (slot == 0) ++tally_.decisions;
    if (slots[slot].type != "policy") {
      pending_[slot] = turns.size();
      pending_pred_[slot] = predicted;
    }

    const auto stage_before = state_.stage;
    EventList events = {{"action", {{"hand", hand_ + 1}, {"seat", slot}, {"stage", to_string(stage_before)}, {"move", move}}}};
    state_ = holdem_step(state_, *a);
    t.state_after = fnv1a_hex(state_.serialize());
    turns.push_back(std::move(t));

    if (!state_.terminal() && state_.stage != stage_before)
      events.push_back({"street", {{"hand", hand_ + 1}, {"stage", to_string(state_.stage)}, {"community", cards_json(state_.community)}}});
    if (state_.terminal()) {
      const auto pay = state_.payoffs();
      chips_[0] += pay[0];
      chips_[1] += pay[1];
      ++tally_.hands;
      tally_.chips += pay[0];
      if (pay[0] > 0)
        ++tally_.won;
      else if (pay[0] < 0)
        ++tally_.lost;
      else
        ++tally_.tied;
      last_hand_ = {{"hand", hand_ + 1}, {"payoffs", {pay[0], pay[1]}}, {"community", cards_json(state_.community)},
                    {"ended", to_string(state_.stage)}};
      if (state_.stage == HoldemStage::Showdown)
        last_hand_["showdown"] = {cards_json({state_.hands[0][0], state_.hands[0][1]}),
                                  cards_json({state_.hands[1][0], state_.hands[1][1]})};
      events.push_back({"hand_end", last_hand_});
      pending_ = {};
      ++hand_;
      if (!finished()) {
        state_ = holdem_match_deal(hand_, seed_, mirrored_);
        events.push_back({"hand_start", {{"hand", hand_ + 1}, {"button", state_.button}}});
      }
    }
    return events;
  }

  json automated_action(int slot, TurnRecord& pre) override {
    const Slot& s = slots[slot];
    if (s.type == "policy") {
      HoldemAction a;
      if (s.policy == "random") {
        // keyed by turn index so a restored session draws the same actions
        RandomLegalPolicy p(derive_seed(derive_seed(seed_, 0xfeed), turns.size()));
        a = p.act(state_, slot);
      } else {
        CallingStationPolicy p;
        a = p.act(state_, slot);
      }
      return {{"move", to_string(a)}};
    }
    const auto legal = holdem_legal_actions(state_);
    json action = {{"prediction", nullptr}};
    HoldemAction a = llm::holdem_safe_default(legal);
    if (auto reply = ask(*s.client, llm::holdem_prompt(state_, slot, hand_ + 1, n_hands_), pre)) {
      const auto p = llm::parse_holdem_prediction(*reply);
      if (p.ok())
        action["prediction"] = to_string(*p.value);
      else
        pre.notes.push_back("prediction missing: " + p.error);
      const auto parsed = llm::parse_holdem_action(*reply, legal);
      if (parsed.ok())
        a = *parsed.value;
      else
        pre.notes.push_back("substituted " + to_string(a) + ": " + parsed.error);
    } else {
      pre.notes.push_back("substituted " + to_string(a) + " after provider failure");
    }
    action["move"] = to_string(a);
    return action;
  }

  json result() const override { return holdem_result_payload(tally_); }

 private:
  int n_hands_;
  bool mirrored_;
  std::uint64_t seed_;
  int hand_ = 0;
  HoldemState state_;
  std::array<long, 2> chips_{};
  std::array<std::optional<std::size_t>, 2> pending_{};
  std::array<int, 2> pending_pred_{-1, -1};
  HoldemTally tally_;
  json last_hand_ = nullptr;
};

// --- Dialogue --------------------------------------------------------------------

class DialogueGame : public Game {
 public:
  explicit DialogueGame(DialogueScenario scenario) : scenario_(std::move(scenario)) {
    transcript_.scenario_id = scenario_.id;
  }

  std::string scenario() const override { return "dialogue"; }
  json config() const override { return to_json(scenario_); }
  json public_config() const override {
    json c = config();
    for (auto& ch : c["characters"]) ch.erase("goal");
    return c;
  }
  bool finished() const override { return !transcript_.end_reason.empty(); }
  std::optional<int> to_act() const override {
    if (finished()) return std::nullopt;
    return left_[speaker_] ? 1 - speaker_ : speaker_;
  }

  json view(std::optional<int> slot) const override {
    json chars = json::array();
    for (int i = 0; i < 2; ++i) {
      json c = {{"name", scenario_.characters[i].name}, {"profile", scenario_.characters[i].profile}};
      if (slot && *slot == i) c["goal"] = scenario_.characters[i].goal;  // goals are private
      chars.push_back(c);
    }
    json turns_json = json::array();
    for (const auto& t : transcript_.turns) turns_json.push_back({{"turn", t.turn}, {"name", t.name}, {"text", t.text}});
    json v = {{"setting", scenario_.setting}, {"characters", chars}, {"turns", turns_json},
              {"max_turns", scenario_.max_turns}, {"left", {left_[0], left_[1]}}};
    if (slot) v["you"] = scenario_.characters[*slot].name;
    if (finished()) v["end_reason"] = transcript_.end_reason;
    return v;
  }

  EventList apply(int slot, const json& action, bool automated, const TurnRecord& pre) override {
    check_turn(*this, slot);
    if (!action.is_object()) throw ServiceError(422, "action must be an object");
    const json text = action.value("text", json(nullptr));
    TurnRecord t = start_record(slots[slot], automated, action, pre);
    const int turn = static_cast<int>(transcript_.turns.size()) + 1;
    t.round = turn;
    t.actor = scenario_.characters[slot].name;
    if (text.is_null() && automated) {
      transcript_.end_reason = "provider_error";
      turns.push_back(std::move(t));
      return {{"end", {{"end_reason", transcript_.end_reason}}}};
    }
    if (!text.is_string() || (!automated && text.get<std::string>().empty()))
      throw ServiceError(422, "text must be a nonempty string");
    std::string said = text.get<std::string>();
    if (action.value("leave", false) && said.find(llm::kLeaveToken) == std::string::npos)
      said += std::string(" ") + llm::kLeaveToken;
    if (said.find(llm::kLeaveToken) != std::string::npos) left_[slot] = true;
    transcript_.turns.push_back({turn, slot, scenario_.characters[slot].name, said});
    t.parsed_action = left_[slot] ? "leave" : "say";
    t.extra = {{"speaker", slot}};
    turns.push_back(std::move(t));
    EventList events = {{"message", {{"turn", turn}, {"name", scenario_.characters[slot].name}, {"text", said}}}};
    if (left_[0] && left_[1])
      transcript_.end_reason = "both_left";
    else if (turn >= scenario_.max_turns)
      transcript_.end_reason = "max_turns";
    if (finished()) events.push_back({"end", {{"end_reason", transcript_.end_reason}}});
    speaker_ = 1 - slot;
    return events;
  }

  json automated_action(int slot, TurnRecord& pre) override {
    const auto reply = ask(*slots[slot].client, llm::dialogue_prompt(scenario_, slot, transcript_.turns), pre);
    return {{"text", reply ? json(*reply) : json(nullptr)}};
  }

  json result() const override {
    Transcript t = transcript_;
    t.participants = {slots[0].name, slots[1].name};
    return dialogue_result_payload(t, {});
  }

 private:
  DialogueScenario scenario_;
  Transcript transcript_;
  std::array<bool, 2> left_{};
  int speaker_ = 0;
};

}  // namespace

std::unique_ptr<Game> make_game(const json& request, std::uint64_t seed) {
  json errors = json::object();
  if (!request.is_object()) throw ServiceError(400, "request must be an object");
  const std::string scenario = request.value("scenario", "");
  const json cfg = request.value("config", json::object());
  if (!cfg.is_object()) errors["config"] = "must be an object";
  std::size_t want_slots = 0;
  std::unique_ptr<Game> game;
  if (scenario == "guess") {
    want_slots = 1;
    const int level = int_field(cfg, "level", 1, 1, 3, errors);
    const int rounds = int_field(cfg, "rounds", kGuessRounds, 1, 100, errors);
    if (errors.empty()) game = std::make_unique<GuessGame>(level, rounds);
  } else if (scenario == "blackjack") {
    want_slots = 1;
    const int n = int_field(cfg, "n_hands", 300, 1, 100000, errors);
    if (errors.empty()) game = std::make_unique<BlackjackGame>(n, seed);
  } else if (scenario == "holdem") {
    want_slots = 2;
    const int n = int_field(cfg, "n_hands", 50, 1, 10000, errors);
    if (cfg.contains("mirrored") && !cfg["mirrored"].is_boolean()) errors["mirrored"] = "must be a boolean";
    if (errors.empty()) game = std::make_unique<HoldemGame>(n, cfg.value("mirrored", false), seed);
  } else if (scenario == "dialogue") {
    want_slots = 2;
    try {
      game = std::make_unique<DialogueGame>(dialogue_scenario_from_json(cfg));
    } catch (const ConfigError& e) {
      errors["config"] = e.what();
    }
  } else {
    errors["scenario"] = "unknown scenario '" + scenario + "'; expected guess, blackjack, holdem or dialogue";
  }

  const json parts = request.value("participants", json::array());
  std::vector<Slot> slots;
  if (!parts.is_array() || (want_slots && parts.size() != want_slots)) {
    errors["participants"] = "expected " + std::to_string(want_slots) + " participant slot(s)";
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string field = "participants[" + std::to_string(i) + "]";
      const json& p = parts[i];
      Slot s;
      s.name = p.value("name", "");
      s.type = p.value("type", "");
      if (s.name.empty() || s.name == "spectator") errors[field + ".name"] = "required, and not 'spectator'";
      for (const auto& other : slots)
        if (other.name == s.name) errors[field + ".name"] = "duplicate participant name";
      if (s.type == "agent") {
        try {
          s.client = std::make_shared<llm::ChatClient>(llm::make_client(llm::agent_spec_from_yaml(p.value("spec", json::object()).dump())));
        } catch (const ConfigError& e) {
          errors[field + ".spec"] = e.what();
        }
      } else if (s.type == "policy") {
        s.policy = p.value("policy", "");
        if (scenario != "holdem") errors[field + ".type"] = "policy slots are only available in holdem";
        if (s.policy != "random" && s.policy != "calling-station")
          errors[field + ".policy"] = "expected random or calling-station";
      } else if (s.type != "human") {
        errors[field + ".type"] = "expected human, agent or policy";
      }
      slots.push_back(std::move(s));
    }
  }
  if (!errors.empty() || !game) throw ServiceError(400, "invalid session request", {{"fields", errors}});
  game->slots = std::move(slots);
  return game;
}

}  // namespace egoarena::service
