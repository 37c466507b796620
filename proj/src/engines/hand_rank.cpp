#include "egoarena/engines/hand_rank.hpp"

#include <algorithm>
#include <vector>

#include "egoarena/core/error.hpp"

namespace egoarena {

std::string to_string(HandCategory c) {
  switch (c) {
    case HandCategory::HighCard: return "high card";
    case HandCategory::OnePair: return "one pair";
    case HandCategory::TwoPair: return "two pair";
    case HandCategory::ThreeOfAKind: return "three of a kind";
    case HandCategory::Straight: return "straight";
    case HandCategory::Flush: return "flush";
    case HandCategory::FullHouse: return "full house";
    case HandCategory::FourOfAKind: return "four of a kind";
    case HandCategory::StraightFlush: return "straight flush";
  }
  return "?";
}

std::string to_string(const HandRank& r) {
  std::string out = to_string(r.category) + " [";
  for (std::size_t i = 0; i < r.tiebreak.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r.tiebreak[i]);
  }
  return out + "]";
}

namespace {

// Highest straight top card in a rank bitmask (bit r set for rank r, ace also
// at bit 1 for the wheel), or 0.
int straight_top(unsigned mask) {
  if (mask & (1u << kAce)) mask |= 1u << 1;
  for (int top = kAce; top >= 5; --top) {
    const unsigned run = 0x1Fu << (top - 4);
    if ((mask & run) == run) return top;
  }
  return 0;
}

}  // namespace

HandRank rank_hand(std::span<const Card> cards) {
  if (cards.size() < 5 || cards.size() > 7) throw InvalidArgument("rank_hand needs 5 to 7 cards");
  std::array<bool, 52> seen{};
  std::array<int, 15> count{};
  std::array<unsigned, 4> suit_mask{};
  std::array<int, 4> suit_count{};
  unsigned rank_mask = 0;
  for (const auto& c : cards) {
    if (seen[c.index()]) throw InvalidArgument("duplicate card " + to_string(c));
    seen[c.index()] = true;
    ++count[c.rank];
    rank_mask |= 1u << c.rank;
    suit_mask[static_cast<int>(c.suit)] |= 1u << c.rank;
    ++suit_count[static_cast<int>(c.suit)];
  }

  HandRank best;
  for (int s = 0; s < 4; ++s) {
    if (suit_count[s] < 5) continue;
    if (int top = straight_top(suit_mask[s])) return {HandCategory::StraightFlush, {top, 0, 0, 0, 0}};
    HandRank flush{HandCategory::Flush, {}};
    int k = 0;
    for (int r = kAce; r >= 2 && k < 5; --r)
      if (suit_mask[s] & (1u << r)) flush.tiebreak[k++] = r;
    best = std::max(best, flush);
  }

  // Ranks grouped by multiplicity, highest rank first.
  std::vector<int> quads, trips, pairs, singles;
  for (int r = kAce; r >= 2; --r) {
    switch (count[r]) {
      case 4: quads.push_back(r); break;
      case 3: trips.push_back(r); break;
      case 2: pairs.push_back(r); break;
      case 1: singles.push_back(r); break;
      default: break;
    }
  }
  auto kickers = [&](std::initializer_list<int> exclude, int n) {
    std::vector<int> out;
    for (int r = kAce; r >= 2 && static_cast<int>(out.size()) < n; --r)
      if (count[r] > 0 && std::find(exclude.begin(), exclude.end(), r) == exclude.end()) out.push_back(r);
    return out;
  };

  if (!quads.empty()) {
    const int q = quads.front();
    return {HandCategory::FourOfAKind, {q, kickers({q}, 1).at(0), 0, 0, 0}};
  }
  if (!trips.empty()) {
    const int t = trips.front();
    int pair = 0;
    if (trips.size() > 1) pair = trips[1];
    if (!pairs.empty()) pair = std::max(pair, pairs.front());
    if (pair) return {HandCategory::FullHouse, {t, pair, 0, 0, 0}};
  }
  if (best.category == HandCategory::Flush) return best;
  if (int top = straight_top(rank_mask)) return {HandCategory::Straight, {top, 0, 0, 0, 0}};
  if (!trips.empty()) {
    const int t = trips.front();
    auto k = kickers({t}, 2);
    return {HandCategory::ThreeOfAKind, {t, k[0], k[1], 0, 0}};
  }
  if (pairs.size() >= 2) {
    const int hi = pairs[0], lo = pairs[1];
    return {HandCategory::TwoPair, {hi, lo, kickers({hi, lo}, 1).at(0), 0, 0}};
  }
  if (pairs.size() == 1) {
    const int p = pairs[0];
    auto k = kickers({p}, 3);
    return {HandCategory::OnePair, {p, k[0], k[1], k[2], 0}};
  }
  auto k = kickers({}, 5);
  return {HandCategory::HighCard, {k[0], k[1], k[2], k[3], k[4]}};
}

HandRank holdem_rank_hand(std::span<const Card, 7> seven) { return rank_hand(std::span<const Card>(seven)); }

}  // namespace egoarena
