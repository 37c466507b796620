#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace egoarena {

enum class Suit : std::uint8_t { Spades = 0, Hearts = 1, Diamonds = 2, Clubs = 3 };

// Rank is the pip value; J=11, Q=12, K=13, A=14.
using Rank = int;
inline constexpr Rank kJack = 11;
inline constexpr Rank kQueen = 12;
inline constexpr Rank kKing = 13;
inline constexpr Rank kAce = 14;

struct Card {
  Rank rank = 2;
  Suit suit = Suit::Spades;

  // Dense index in [0, 52): suit * 13 + (rank - 2).
  int index() const { return static_cast<int>(suit) * 13 + (rank - 2); }
  static Card from_index(int index);

  friend bool operator==(const Card&, const Card&) = default;
};

// Two-character code, e.g. "As", "Th", "9c". Ranks 2-9, T, J, Q, K, A;
// suits s, h, d, c.
std::string to_string(const Card& card);
// Human-facing form with a suit glyph, e.g. "A♠".
std::string to_display(const Card& card);
Card parse_card(std::string_view code);

std::string to_string(const std::vector<Card>& cards);

// The 52 cards in index order.
std::vector<Card> fresh_deck();

// A deck shuffled with Rng(seed).shuffle (Fisher-Yates over mt19937_64).
std::vector<Card> shuffled_deck(std::uint64_t seed);

}  // namespace egoarena
