#include "egoarena/engines/blackjack.hpp"

#include <algorithm>

#include "egoarena/core/error.hpp"

namespace egoarena {

std::string to_string(BlackjackPhase p) {
  switch (p) {
    case BlackjackPhase::PlayerTurn: return "player_turn";
    case BlackjackPhase::DealerTurn: return "dealer_turn";
    case BlackjackPhase::Settled: return "settled";
  }
  return "?";
}

std::string to_string(BlackjackOutcome o) {
  switch (o) {
    case BlackjackOutcome::Win: return "win";
    case BlackjackOutcome::Lose: return "lose";
    case BlackjackOutcome::Tie: return "tie";
  }
  return "?";
}

std::string to_string(BlackjackAction a) { return a == BlackjackAction::Hit ? "hit" : "stand"; }

std::vector<Card> BlackjackState::dealer_hand() const {
  std::vector<Card> hand{dealer_upcard, dealer_hole};
  hand.insert(hand.end(), dealer_drawn.begin(), dealer_drawn.end());
  return hand;
}

std::string BlackjackState::serialize() const {
  std::string out = "player=" + to_string(player_hand) + ";up=" + to_string(dealer_upcard) +
                    ";hole=" + to_string(dealer_hole) + ";drawn=" + to_string(dealer_drawn) +
                    ";shoe=" + to_string(shoe) + ";phase=" + to_string(phase);
  if (outcome) out += ";outcome=" + to_string(*outcome);
  return out;
}

HandValue blackjack_hand_value(const std::vector<Card>& cards) {
  int total = 0;
  int aces_high = 0;
  for (const auto& c : cards) {
    if (c.rank == kAce) {
      total += 11;
      ++aces_high;
    } else {
      total += std::min(c.rank, 10);
    }
  }
  while (total > 21 && aces_high > 0) {
    total -= 10;
    --aces_high;
  }
  return {total, aces_high > 0};
}

BlackjackState blackjack_deal(std::uint64_t seed) { return blackjack_deal_from(shuffled_deck(seed)); }

BlackjackState blackjack_deal_from(std::vector<Card> deck) {
  if (deck.size() < 4) throw InvalidArgument("blackjack deal needs at least 4 cards");
  BlackjackState s;
  s.player_hand = {deck[0], deck[2]};
  s.dealer_upcard = deck[1];
  s.dealer_hole = deck[3];
  s.shoe.assign(deck.begin() + 4, deck.end());
  return s;
}

namespace {

Card draw(std::vector<Card>& shoe) {
  if (shoe.empty()) throw RuleViolation("blackjack shoe exhausted");
  Card c = shoe.front();
  shoe.erase(shoe.begin());
  return c;
}

void dealer_play_and_settle(BlackjackState& s) {
  s.phase = BlackjackPhase::DealerTurn;
  while (blackjack_hand_value(s.dealer_hand()).value < kDealerStandsOn) s.dealer_drawn.push_back(draw(s.shoe));
  const int player = blackjack_hand_value(s.player_hand).value;
  const int dealer = blackjack_hand_value(s.dealer_hand()).value;
  if (dealer > 21 || player > dealer)
    s.outcome = BlackjackOutcome::Win;
  else if (player < dealer)
    s.outcome = BlackjackOutcome::Lose;
  else
    s.outcome = BlackjackOutcome::Tie;
  s.phase = BlackjackPhase::Settled;
}

}  // namespace

BlackjackState blackjack_step(const BlackjackState& state, BlackjackAction action) {
  if (state.phase != BlackjackPhase::PlayerTurn)
    throw RuleViolation("blackjack action '" + to_string(action) + "' outside the player's turn");
  BlackjackState s = state;
  if (action == BlackjackAction::Hit) {
    s.player_hand.push_back(draw(s.shoe));
    if (blackjack_hand_value(s.player_hand).value > 21) {
      s.phase = BlackjackPhase::Settled;
      s.outcome = BlackjackOutcome::Lose;
    }
    return s;
  }
  dealer_play_and_settle(s);
  return s;
}

}  // namespace egoarena
