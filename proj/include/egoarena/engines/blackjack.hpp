#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egoarena/engines/cards.hpp"

namespace egoarena {

// Single-deck Blackjack, player versus dealer, hit or stand only.
// The deck is reshuffled every hand; the dealer stands on every 17 (soft ones
// included). A two-card 21 is not special: it is scored as 21 like any other.

enum class BlackjackPhase { PlayerTurn, DealerTurn, Settled };
enum class BlackjackOutcome { Win, Lose, Tie };
enum class BlackjackAction { Hit, Stand };

std::string to_string(BlackjackPhase p);
std::string to_string(BlackjackOutcome o);
std::string to_string(BlackjackAction a);

struct HandValue {
  int value = 0;
  bool soft = false;  // an ace is still counted as 11
  friend bool operator==(const HandValue&, const HandValue&) = default;
};

struct BlackjackState {
  std::vector<Card> player_hand;
  Card dealer_upcard;
  Card dealer_hole;
  std::vector<Card> dealer_drawn;
  std::vector<Card> shoe;  // remaining cards, next card at the front
  BlackjackPhase phase = BlackjackPhase::PlayerTurn;
  std::optional<BlackjackOutcome> outcome;

  std::vector<Card> dealer_hand() const;
  // Canonical text used for log digests.
  std::string serialize() const;
};

inline constexpr int kDealerStandsOn = 17;

// Aces count 11, then are demoted to 1 one at a time while the total exceeds 21.
HandValue blackjack_hand_value(const std::vector<Card>& cards);

// Shuffles a fresh deck with `seed` and deals player, dealer up, player,
// dealer hole, in that order.
BlackjackState blackjack_deal(std::uint64_t seed);

// Deals from an explicit card order (same dealing order as blackjack_deal).
BlackjackState blackjack_deal_from(std::vector<Card> deck);

// Applies a player decision. Standing runs the dealer to completion and
// settles. Throws RuleViolation outside the player's turn.
BlackjackState blackjack_step(const BlackjackState& state, BlackjackAction action);

}  // namespace egoarena
