#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egoarena/engines/cards.hpp"

namespace egoarena {

// Heads-up fixed-limit Texas Hold'em.
//
// Seats are 0 and 1. The button posts the small blind, acts first preflop and
// last on every later street. A Raise with no outstanding bet is the opening
// bet of the street. Blinds do not count towards the per-street raise cap.
//
// Dealing from a deck shuffled with the seed: seat 0 gets deck[0] and deck[2],
// seat 1 gets deck[1] and deck[3], the community cards are deck[4..8] in order.
// No burn cards.

enum class HoldemAction : int { Fold = 0, Check = 1, Call = 2, Raise = 3 };
inline constexpr int kNumHoldemActions = 4;
inline constexpr std::array<HoldemAction, 4> kAllHoldemActions = {HoldemAction::Fold, HoldemAction::Check,
                                                                   HoldemAction::Call, HoldemAction::Raise};

enum class HoldemStage { Preflop, Flop, Turn, River, Showdown, Folded };

std::string to_string(HoldemAction a);
std::string to_string(HoldemStage s);
std::optional<HoldemAction> holdem_action_from_string(const std::string& name);

struct HoldemConfig {
  int small_blind = 1;
  int big_blind = 2;
  int small_bet = 2;  // preflop and flop
  int big_bet = 4;    // turn and river
  int max_raises = 4;
  int stack = 100;    // starting stack per hand, both seats
};

// Bitmask over HoldemAction values.
struct HoldemActionSet {
  unsigned bits = 0;
  bool contains(HoldemAction a) const { return bits & (1u << static_cast<int>(a)); }
  void insert(HoldemAction a) { bits |= 1u << static_cast<int>(a); }
  bool empty() const { return bits == 0; }
  std::vector<HoldemAction> to_vector() const;
  friend bool operator==(const HoldemActionSet&, const HoldemActionSet&) = default;
};

std::string to_string(const HoldemActionSet& s);

struct HoldemEvent {
  int player = 0;
  HoldemStage stage = HoldemStage::Preflop;
  HoldemAction action = HoldemAction::Check;
};

struct HoldemState {
  HoldemConfig config;
  std::array<std::array<Card, 2>, 2> hands{};
  std::vector<Card> community;
  std::vector<Card> deck;  // undealt cards, next at the front
  HoldemStage stage = HoldemStage::Preflop;
  int pot = 0;  // every chip put in this hand, current street included
  std::array<int, 2> committed{};  // this street
  std::array<int, 2> stacks{};
  std::array<bool, 2> acted{};  // this street
  int raise_count = 0;
  int to_act = 0;
  int button = 0;
  std::vector<HoldemEvent> history;

  bool terminal() const { return stage == HoldemStage::Showdown || stage == HoldemStage::Folded; }
  int total_chips() const { return pot + stacks[0] + stacks[1]; }
  // Chips won (+) or lost (-) relative to the starting stack. Final once terminal.
  std::array<int, 2> payoffs() const;
  // Bet size on the current street.
  int bet_size() const;
  std::string serialize() const;
};

HoldemState holdem_deal(std::uint64_t seed, int button = 0, HoldemConfig config = {});
HoldemState holdem_deal_from(const std::vector<Card>& deck, int button = 0, HoldemConfig config = {});

// Exchanges the two seats' hole cards and moves the button, so a replay of the
// same deal puts every player in the other's position.
HoldemState holdem_mirror(const HoldemState& fresh_deal);

HoldemActionSet holdem_legal_actions(const HoldemState& state);

// Throws RuleViolation for a terminal state or an illegal action.
HoldemState holdem_step(const HoldemState& state, HoldemAction action);

}  // namespace egoarena
