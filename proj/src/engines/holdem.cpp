#include "egoarena/engines/holdem.hpp"

#include "egoarena/core/error.hpp"
#include "egoarena/engines/hand_rank.hpp"

namespace egoarena {

std::string to_string(HoldemAction a) {
  switch (a) {
    case HoldemAction::Fold: return "fold";
    case HoldemAction::Check: return "check";
    case HoldemAction::Call: return "call";
    case HoldemAction::Raise: return "raise";
  }
  return "?";
}

std::string to_string(HoldemStage s) {
  switch (s) {
    case HoldemStage::Preflop: return "preflop";
    case HoldemStage::Flop: return "flop";
    case HoldemStage::Turn: return "turn";
    case HoldemStage::River: return "river";
    case HoldemStage::Showdown: return "showdown";
    case HoldemStage::Folded: return "folded";
  }
  return "?";
}

std::optional<HoldemAction> holdem_action_from_string(const std::string& name) {
  for (auto a : kAllHoldemActions)
    if (to_string(a) == name) return a;
  return std::nullopt;
}

std::vector<HoldemAction> HoldemActionSet::to_vector() const {
  std::vector<HoldemAction> out;
  for (auto a : kAllHoldemActions)
    if (contains(a)) out.push_back(a);
  return out;
}

std::string to_string(const HoldemActionSet& s) {
  std::string out;
  for (auto a : s.to_vector()) {
    if (!out.empty()) out += ", ";
    out += to_string(a);
  }
  return out;
}

std::array<int, 2> HoldemState::payoffs() const {
  return {stacks[0] - config.stack, stacks[1] - config.stack};
}

int HoldemState::bet_size() const {
  return (stage == HoldemStage::Preflop || stage == HoldemStage::Flop) ? config.small_bet : config.big_bet;
}

std::string HoldemState::serialize() const {
  std::string out = "hands=" + to_string(hands[0][0]) + to_string(hands[0][1]) + "," + to_string(hands[1][0]) +
                    to_string(hands[1][1]) + ";board=" + to_string(community) + ";stage=" + to_string(stage) +
                    ";pot=" + std::to_string(pot) + ";committed=" + std::to_string(committed[0]) + "," +
                    std::to_string(committed[1]) + ";stacks=" + std::to_string(stacks[0]) + "," +
                    std::to_string(stacks[1]) + ";raises=" + std::to_string(raise_count) +
                    ";to_act=" + std::to_string(to_act) + ";button=" + std::to_string(button) + ";history=";
  for (const auto& e : history) out += std::to_string(e.player) + ":" + to_string(e.action) + "/";
  return out;
}

HoldemState holdem_deal(std::uint64_t seed, int button, HoldemConfig config) {
  return holdem_deal_from(shuffled_deck(seed), button, config);
}

HoldemState holdem_deal_from(const std::vector<Card>& deck, int button, HoldemConfig config) {
  if (deck.size() < 9) throw InvalidArgument("holdem deal needs at least 9 cards");
  if (button != 0 && button != 1) throw InvalidArgument("button must be seat 0 or 1");
  const int worst_case = config.big_blind + 2 * config.max_raises * config.small_bet +
                         2 * config.max_raises * config.big_bet;
  if (config.stack < worst_case)
    throw InvalidArgument("stack must cover the capped betting of a full hand (" + std::to_string(worst_case) + ")");

  HoldemState s;
  s.config = config;
  s.hands[0] = {deck[0], deck[2]};
  s.hands[1] = {deck[1], deck[3]};
  s.deck.assign(deck.begin() + 4, deck.end());
  s.button = button;
  const int sb = button, bb = 1 - button;
  s.stacks = {config.stack, config.stack};
  s.stacks[sb] -= config.small_blind;
  s.stacks[bb] -= config.big_blind;
  s.committed[sb] = config.small_blind;
  s.committed[bb] = config.big_blind;
  s.pot = config.small_blind + config.big_blind;
  s.to_act = sb;
  return s;
}

HoldemState holdem_mirror(const HoldemState& fresh_deal) {
  if (!fresh_deal.history.empty()) throw InvalidArgument("holdem_mirror expects a fresh deal");
  std::vector<Card> deck{fresh_deal.hands[1][0], fresh_deal.hands[0][0], fresh_deal.hands[1][1],
                         fresh_deal.hands[0][1]};
  deck.insert(deck.end(), fresh_deal.deck.begin(), fresh_deal.deck.end());
  return holdem_deal_from(deck, 1 - fresh_deal.button, fresh_deal.config);
}

HoldemActionSet holdem_legal_actions(const HoldemState& s) {
  if (s.terminal()) throw RuleViolation("hand is over (" + to_string(s.stage) + ")");
  const int me = s.to_act;
  const bool facing = s.committed[1 - me] > s.committed[me];
  HoldemActionSet legal;
  if (facing) {
    legal.insert(HoldemAction::Fold);
    legal.insert(HoldemAction::Call);
  } else {
    legal.insert(HoldemAction::Check);
  }
  if (s.raise_count < s.config.max_raises) legal.insert(HoldemAction::Raise);
  return legal;
}

namespace {

void pay(HoldemState& s, int player, int amount) {
  s.stacks[player] -= amount;
  s.committed[player] += amount;
  s.pot += amount;
}

void deal_community(HoldemState& s, int n) {
  for (int i = 0; i < n; ++i) {
    s.community.push_back(s.deck.front());
    s.deck.erase(s.deck.begin());
  }
}

void showdown(HoldemState& s) {
  s.stage = HoldemStage::Showdown;
  std::array<HandRank, 2> rank;
  for (int p = 0; p < 2; ++p) {
    std::array<Card, 7> seven{s.hands[p][0], s.hands[p][1], s.community[0], s.community[1],
                              s.community[2], s.community[3], s.community[4]};
    rank[p] = holdem_rank_hand(seven);
  }
  if (rank[0] != rank[1]) {
    s.stacks[rank[0] > rank[1] ? 0 : 1] += s.pot;
  } else {
    const int half = s.pot / 2;
    s.stacks[0] += half;
    s.stacks[1] += half;
    s.stacks[s.button] += s.pot - 2 * half;  // odd chip to the button
  }
  s.pot = 0;
}

void next_street(HoldemState& s) {
  s.committed = {0, 0};
  s.acted = {false, false};
  s.raise_count = 0;
  s.to_act = 1 - s.button;
  switch (s.stage) {
    case HoldemStage::Preflop:
      s.stage = HoldemStage::Flop;
      deal_community(s, 3);
      break;
    case HoldemStage::Flop:
      s.stage = HoldemStage::Turn;
      deal_community(s, 1);
      break;
    case HoldemStage::Turn:
      s.stage = HoldemStage::River;
      deal_community(s, 1);
      break;
    default:
      showdown(s);
      break;
  }
}

}  // namespace

HoldemState holdem_step(const HoldemState& state, HoldemAction action) {
  const auto legal = holdem_legal_actions(state);
  if (!legal.contains(action))
    throw RuleViolation("illegal action '" + to_string(action) + "'; legal: {" + to_string(legal) + "}");

  HoldemState s = state;
  const int me = s.to_act, opp = 1 - me;
  s.history.push_back({me, s.stage, action});
  switch (action) {
    case HoldemAction::Fold:
      s.stage = HoldemStage::Folded;
      s.stacks[opp] += s.pot;
      s.pot = 0;
      return s;
    case HoldemAction::Check:
      break;
    case HoldemAction::Call:
      pay(s, me, s.committed[opp] - s.committed[me]);
      break;
    case HoldemAction::Raise:
      pay(s, me, s.committed[opp] - s.committed[me] + s.bet_size());
      ++s.raise_count;
      break;
  }
  s.acted[me] = true;
  if (s.acted[0] && s.acted[1] && s.committed[0] == s.committed[1])
    next_street(s);
  else
    s.to_act = opp;
  return s;
}

}  // namespace egoarena
