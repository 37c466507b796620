#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>

#include "egoarena/engines/cards.hpp"

namespace egoarena {

enum class HandCategory : int {
  HighCard = 0,
  OnePair,
  TwoPair,
  ThreeOfAKind,
  Straight,
  Flush,
  FullHouse,
  FourOfAKind,
  StraightFlush,
};

std::string to_string(HandCategory c);

// Category plus up to five tiebreak ranks, most significant first; unused
// slots are zero. Ordered lexicographically, so operator<=> is the poker order.
struct HandRank {
  HandCategory category = HandCategory::HighCard;
  std::array<int, 5> tiebreak{};

  friend auto operator<=>(const HandRank&, const HandRank&) = default;
  friend bool operator==(const HandRank&, const HandRank&) = default;
};

std::string to_string(const HandRank& r);

// Best five-card rank out of 5 to 7 distinct cards. Throws InvalidArgument on
// duplicates or a wrong card count.
HandRank rank_hand(std::span<const Card> cards);

// Seven-card entry point used at showdown.
HandRank holdem_rank_hand(std::span<const Card, 7> seven);

}  // namespace egoarena
