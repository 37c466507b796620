#include "egoarena/engines/cards.hpp"

#include <span>

#include "egoarena/core/error.hpp"
#include "egoarena/core/rng.hpp"

namespace egoarena {

namespace {
constexpr std::string_view kRankChars = "23456789TJQKA";
constexpr std::string_view kSuitChars = "shdc";
constexpr std::array<std::string_view, 4> kSuitGlyphs = {"♠", "♥", "♦", "♣"};
}  // namespace

Card Card::from_index(int index) {
  if (index < 0 || index >= 52) throw InvalidArgument("card index out of range");
  return Card{index % 13 + 2, static_cast<Suit>(index / 13)};
}

std::string to_string(const Card& card) {
  return {kRankChars[card.rank - 2], kSuitChars[static_cast<int>(card.suit)]};
}

std::string to_display(const Card& card) {
  std::string out = card.rank == 10 ? std::string("10") : std::string(1, kRankChars[card.rank - 2]);
  out += kSuitGlyphs[static_cast<int>(card.suit)];
  return out;
}

Card parse_card(std::string_view code) {
  if (code.size() != 2) throw InvalidArgument("bad card code: " + std::string(code));
  const auto r = kRankChars.find(static_cast<char>(std::toupper(static_cast<unsigned char>(code[0]))));
  const auto s = kSuitChars.find(static_cast<char>(std::tolower(static_cast<unsigned char>(code[1]))));
  if (r == std::string_view::npos || s == std::string_view::npos)
    throw InvalidArgument("bad card code: " + std::string(code));
  return Card{static_cast<Rank>(r) + 2, static_cast<Suit>(s)};
}

std::string to_string(const std::vector<Card>& cards) {
  std::string out;
  for (const auto& c : cards) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

std::vector<Card> fresh_deck() {
  std::vector<Card> deck;
  deck.reserve(52);
  for (int i = 0; i < 52; ++i) deck.push_back(Card::from_index(i));
  return deck;
}

std::vector<Card> shuffled_deck(std::uint64_t seed) {
  auto deck = fresh_deck();
  Rng rng(seed);
  rng.shuffle(std::span<Card>(deck));
  return deck;
}

}  // namespace egoarena
