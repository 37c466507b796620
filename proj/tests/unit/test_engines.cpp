#include <gtest/gtest.h>

#include <set>

#include "../oracles/oracles.hpp"
#include "egoarena/core/error.hpp"
#include "egoarena/core/rng.hpp"
#include "egoarena/engines/blackjack.hpp"
#include "egoarena/engines/bomb.hpp"
#include "egoarena/engines/guess.hpp"
#include "egoarena/engines/hand_rank.hpp"
#include "egoarena/engines/holdem.hpp"
#include "egoarena/engines/rps.hpp"
#include "egoarena/harness/io.hpp"
#include "egoarena/harness/runners.hpp"
#include "egoarena/opponents.hpp"

using namespace egoarena;

namespace {
std::vector<Card> cards(std::initializer_list<const char*> codes) {
  std::vector<Card> out;
  for (auto c : codes) out.push_back(parse_card(c));
  return out;
}
const std::string kSource = EGOARENA_SOURCE_DIR;
}  // namespace

// --- cards and rng ---

TEST(Cards, RoundTripAllCodes) {
  const auto deck = fresh_deck();
  ASSERT_EQ(deck.size(), 52u);
  std::set<int> seen;
  for (const auto& c : deck) {
    EXPECT_EQ(parse_card(to_string(c)), c);
    EXPECT_EQ(Card::from_index(c.index()), c);
    seen.insert(c.index());
  }
  EXPECT_EQ(seen.size(), 52u);
  EXPECT_THROW(parse_card("1x"), Error);
}

TEST(Rng, SeededShuffleIsReproducibleAndSeedSensitive) {
  EXPECT_EQ(shuffled_deck(5), shuffled_deck(5));
  EXPECT_NE(shuffled_deck(5), shuffled_deck(6));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  Rng r(3);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(7), 7u);
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

// --- guess ---

TEST(Guess, GoldIsEightyPercentOfMean) {
  EXPECT_DOUBLE_EQ(guess_gold(50, 50), 40.0);
  EXPECT_DOUBLE_EQ(guess_gold(40, 50), 36.0);
  EXPECT_THROW(guess_gold(0, 50), InvalidArgument);
  EXPECT_THROW(guess_gold(50, 101), InvalidArgument);
}

TEST(Guess, CloserToGoldWinsAndEqualDistanceTies) {
  GuessState s;
  s = guess_step(s, 40, 50);  // gold 36: 40 is 4 away, 50 is 14
  EXPECT_EQ(s.history.back().winner, GuessWinner::Agent);
  s = guess_step(s, 50, 50);
  EXPECT_EQ(s.history.back().winner, GuessWinner::Tie);
  s = guess_step(s, 90, 10);  // gold 40
  EXPECT_EQ(s.history.back().winner, GuessWinner::Opponent);
  EXPECT_EQ(s.round, 4);
}

TEST(Guess, SessionEndsAfterMaxRounds) {
  GuessState s;
  s.max_rounds = 2;
  s = guess_step(s, 10, 10);
  s = guess_step(s, 10, 10);
  EXPECT_TRUE(s.finished());
  EXPECT_THROW(guess_step(s, 10, 10), RuleViolation);
  EXPECT_THROW(guess_forfeit(s, 10), RuleViolation);
}

TEST(Guess, ForfeitGivesRoundToOpponent) {
  const auto s = guess_forfeit(GuessState{}, 45);
  const auto& r = s.history.back();
  EXPECT_TRUE(r.forfeit);
  EXPECT_EQ(r.winner, GuessWinner::Opponent);
  EXPECT_DOUBLE_EQ(r.gold, 36.0);
}

TEST(Opponents, LevelOneIsConstant) {
  for (int r = 1; r <= 10; ++r) EXPECT_EQ(level1_action(r), 50);
  EXPECT_EQ(level1_action(3, 33), 33);
}

TEST(Opponents, LevelTwoArithmeticSequence) {
  const std::vector<int> want = {50, 45, 40, 35, 30, 25, 20, 15, 10, 5};
  for (int r = 1; r <= 10; ++r) EXPECT_EQ(level2_action(r), want[r - 1]);
}

TEST(Opponents, LevelThreeCopiesPreviousGold) {
  GuessOpponent opp(3);
  GuessState s;
  EXPECT_DOUBLE_EQ(opp.act(1, s.history), kLevel3Opening);
  s = guess_step(s, 30, opp.act(1, s.history));
  EXPECT_DOUBLE_EQ(opp.act(2, s.history), 32.0);  // 0.8 x (30 + 50) / 2
  s = guess_step(s, 7, opp.act(2, s.history));
  EXPECT_DOUBLE_EQ(opp.act(3, s.history), 15.6);  // 0.8 x 39 / 2
  EXPECT_DOUBLE_EQ(level3_action(1, 1), 1.0);       // 0.8 clamps to the range floor
  EXPECT_THROW(GuessOpponent(4), InvalidArgument);
}

// --- rps ---

TEST(Rps, StandardAndCounterfactualRules) {
  RpsRules std_rules, cf{RpsVariant::Counterfactual};
  EXPECT_EQ(rps_outcome(std_rules, RpsMove::Rock, RpsMove::Scissors), RpsOutcome::First);
  EXPECT_EQ(rps_outcome(cf, RpsMove::Rock, RpsMove::Scissors), RpsOutcome::Second);
  for (auto a : {RpsMove::Rock, RpsMove::Paper, RpsMove::Scissors}) {
    EXPECT_EQ(rps_outcome(std_rules, a, a), RpsOutcome::Tie);
    for (auto b : {RpsMove::Rock, RpsMove::Paper, RpsMove::Scissors})
      if (a != b) {
        EXPECT_NE(std_rules.beats(a, b), cf.beats(a, b));
      }
  }
}

// --- hand ranking ---

TEST(HandRank, Categories) {
  EXPECT_EQ(rank_hand(cards({"As", "Ks", "Qs", "Js", "Ts", "2d", "3c"})).category, HandCategory::StraightFlush);
  EXPECT_EQ(rank_hand(cards({"9s", "9h", "9d", "9c", "2s"})).category, HandCategory::FourOfAKind);
  EXPECT_EQ(rank_hand(cards({"9s", "9h", "9d", "2c", "2s"})).category, HandCategory::FullHouse);
  EXPECT_EQ(rank_hand(cards({"As", "2h", "3d", "4c", "5s"})).category, HandCategory::Straight);
  EXPECT_EQ(rank_hand(cards({"As", "Kh", "Qd", "Jc", "9s"})).category, HandCategory::HighCard);
  EXPECT_THROW(rank_hand(cards({"As", "As", "Qd", "Jc", "9s"})), InvalidArgument);
  EXPECT_THROW(rank_hand(cards({"As", "Kh", "Qd", "Jc"})), InvalidArgument);
}

TEST(HandRank, WheelIsLowestStraight) {
  const auto wheel = rank_hand(cards({"As", "2h", "3d", "4c", "5s"}));
  const auto six = rank_hand(cards({"2h", "3d", "4c", "5s", "6d"}));
  EXPECT_LT(wheel, six);
}

TEST(HandRank, MatchesExhaustiveOracle) {
  Rng rng(8);
  std::vector<int> prev_key;
  HandRank prev_rank;
  for (int i = 0; i < 300; ++i) {
    auto deck = fresh_deck();
    rng.shuffle(std::span<Card>(deck));
    std::array<Card, 7> seven;
    std::copy_n(deck.begin(), 7, seven.begin());
    const auto key = oracle::best_of_21(seven);
    const auto rank = holdem_rank_hand(std::span<const Card, 7>(seven));
    ASSERT_EQ(static_cast<int>(rank.category), key[0]) << to_string(std::vector<Card>(seven.begin(), seven.end()));
    if (i > 0) {
      EXPECT_EQ(prev_key < key, prev_rank < rank);
      EXPECT_EQ(prev_key == key, prev_rank == rank);
    }
    prev_key = key;
    prev_rank = rank;
  }
}

// --- hold'em ---

TEST(Holdem, BlindsAndFirstToAct) {
  const auto s = holdem_deal(1, 0);
  EXPECT_EQ(s.committed[0], 1);
  EXPECT_EQ(s.committed[1], 2);
  EXPECT_EQ(s.to_act, 0);  // button acts first preflop
  EXPECT_EQ(s.total_chips(), 200);
  EXPECT_EQ(to_string(holdem_legal_actions(s)), to_string([] {
              HoldemActionSet x;
              x.insert(HoldemAction::Fold);
              x.insert(HoldemAction::Call);
              x.insert(HoldemAction::Raise);
              return x;
            }()));
}

TEST(Holdem, RaiseCapLeavesFoldAndCall) {
  auto s = holdem_deal(2, 0);
  for (int i = 0; i < 4; ++i) s = holdem_step(s, HoldemAction::Raise);
  const auto legal = holdem_legal_actions(s);
  EXPECT_EQ(legal.to_vector(), (std::vector<HoldemAction>{HoldemAction::Fold, HoldemAction::Call}));
  EXPECT_THROW(holdem_step(s, HoldemAction::Raise), RuleViolation);
}

TEST(Holdem, FoldAwardsPotToOpponent) {
  auto s = holdem_deal(3, 0);
  s = holdem_step(s, HoldemAction::Fold);
  EXPECT_EQ(s.stage, HoldemStage::Folded);
  EXPECT_EQ(s.payoffs()[0], -1);
  EXPECT_EQ(s.payoffs()[1], 1);
  EXPECT_THROW(holdem_legal_actions(s), RuleViolation);
}

TEST(Holdem, CheckDownReachesShowdownWithFiveCards) {
  auto s = holdem_deal(4, 1);
  s = holdem_step(s, HoldemAction::Call);
  while (!s.terminal()) s = holdem_step(s, HoldemAction::Check);
  EXPECT_EQ(s.stage, HoldemStage::Showdown);
  EXPECT_EQ(s.community.size(), 5u);
  EXPECT_EQ(s.payoffs()[0] + s.payoffs()[1], 0);
}

TEST(Holdem, ChipsConservedUnderRandomPlay) {
  RandomLegalPolicy p(9);
  for (int h = 0; h < 500; ++h) {
    auto s = holdem_deal(derive_seed(5, h), h % 2);
    while (!s.terminal()) {
      s = holdem_step(s, p.act(s, s.to_act));
      ASSERT_EQ(s.total_chips(), 200);
    }
    ASSERT_EQ(s.payoffs()[0] + s.payoffs()[1], 0);
  }
}

TEST(Holdem, MirrorSwapsSeatsKeepsBoard) {
  const auto a = holdem_deal(10, 0);
  const auto b = holdem_mirror(a);
  EXPECT_EQ(b.hands[0], a.hands[1]);
  EXPECT_EQ(b.hands[1], a.hands[0]);
  EXPECT_EQ(b.deck, a.deck);
  EXPECT_EQ(b.button, 1);
}

TEST(Holdem, MirroredDuelOfIdenticalPoliciesIsZero) {
  CallingStationPolicy a, b;
  EXPECT_EQ(holdem_duel(a, b, 200, 3), 0);
}

// --- blackjack ---

TEST(Blackjack, HandValues) {
  EXPECT_EQ(blackjack_hand_value(cards({"As", "6d"})), (HandValue{17, true}));
  EXPECT_EQ(blackjack_hand_value(cards({"As", "6d", "9c"})), (HandValue{16, false}));
  EXPECT_EQ(blackjack_hand_value(cards({"As", "Ad", "9c"})), (HandValue{21, true}));
  EXPECT_EQ(blackjack_hand_value(cards({"Ks", "Qd", "2c"})), (HandValue{22, false}));
}

TEST(Blackjack, DealOrderAndHiddenHole) {
  const auto deck = cards({"2s", "3s", "4s", "5s", "6s", "7s", "8s"});
  auto full = deck;
  for (const auto& c : fresh_deck())
    if (std::find(deck.begin(), deck.end(), c) == deck.end()) full.push_back(c);
  const auto s = blackjack_deal_from(full);
  EXPECT_EQ(s.player_hand, cards({"2s", "4s"}));
  EXPECT_EQ(s.dealer_upcard, parse_card("3s"));
  EXPECT_EQ(s.dealer_hole, parse_card("5s"));
  EXPECT_EQ(s.phase, BlackjackPhase::PlayerTurn);
}

TEST(Blackjack, DealerStandsOnSoftSeventeen) {
  // player 10+9, dealer A+6 stands at soft 17; player wins 19 v 17.
  auto deck = cards({"Ts", "As", "9s", "6s"});
  for (const auto& c : fresh_deck())
    if (std::find(deck.begin(), deck.end(), c) == deck.end()) deck.push_back(c);
  auto s = blackjack_step(blackjack_deal_from(deck), BlackjackAction::Stand);
  EXPECT_EQ(s.dealer_hand().size(), 2u);
  EXPECT_EQ(*s.outcome, BlackjackOutcome::Win);
  EXPECT_THROW(blackjack_step(s, BlackjackAction::Hit), RuleViolation);
}

TEST(Blackjack, PlayerBustLoses) {
  auto deck = cards({"Ts", "2s", "9s", "3s", "Ks"});
  for (const auto& c : fresh_deck())
    if (std::find(deck.begin(), deck.end(), c) == deck.end()) deck.push_back(c);
  const auto s = blackjack_step(blackjack_deal_from(deck), BlackjackAction::Hit);
  EXPECT_EQ(s.phase, BlackjackPhase::Settled);
  EXPECT_EQ(*s.outcome, BlackjackOutcome::Lose);
}

TEST(Blackjack, TwoCardTwentyOneIsOrdinary) {
  // player A+K, dealer 9+2 then 10 = 21: a push, not a natural win.
  auto deck = cards({"As", "9s", "Kd", "2s", "Th"});
  for (const auto& c : fresh_deck())
    if (std::find(deck.begin(), deck.end(), c) == deck.end()) deck.push_back(c);
  const auto s = blackjack_step(blackjack_deal_from(deck), BlackjackAction::Stand);
  EXPECT_EQ(*s.outcome, BlackjackOutcome::Tie);
}

TEST(Blackjack, ThresholdPolicyNearIndependentOracle) {
  const auto t = play_blackjack_policy(
      [](const BlackjackState& s) {
        return blackjack_hand_value(s.player_hand).value < 17 ? BlackjackAction::Hit : BlackjackAction::Stand;
      },
      20000, 1);
  const double engine = 100.0 * t.wins / 20000.0;
  const double ref = oracle::blackjack_threshold_mc(200000, 5).win_rate();
  EXPECT_NEAR(engine, ref, 1.5);  // loose: 20k hands
}

// --- bomb ---

TEST(Bomb, OneBombScriptScoresTwentyInTwoRounds) {
  auto map = load_bomb_map(kSource + "/data/fixtures/one_bomb.json");
  auto r1 = bomb_step(map, {BombAction::cut("red"), BombAction::wait(), BombAction::wait()});
  EXPECT_EQ(r1.points, kPointsPerPhase);
  auto r2 = bomb_step(r1.state, {BombAction::wait(), BombAction::cut("blue"), BombAction::wait()});
  EXPECT_EQ(r2.points, kPointsPerPhase);
  EXPECT_EQ(r2.state.score, 20);
  EXPECT_EQ(bomb_max_score(r2.state), 20);
  EXPECT_TRUE(r2.state.bombs[0].defused());
  EXPECT_EQ(r2.state.round, 3);
}

TEST(Bomb, CutsAreJudgedAgainstRoundStart) {
  auto map = load_bomb_map(kSource + "/data/fixtures/one_bomb.json");
  // Both phases in one round: only red counts, blue was not yet next.
  auto r = bomb_step(map, {BombAction::cut("red"), BombAction::cut("blue"), BombAction::wait()});
  EXPECT_EQ(r.points, 10);
  EXPECT_EQ(r.state.bombs[0].phases_cut, 1);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Bomb, MovesTakeEffectAfterCuts) {
  auto map = load_bomb_map(kSource + "/data/fixtures/one_bomb.json");
  const int vault = *map.room_index("vault");
  const int entry = *map.room_index("entry");
  auto r = bomb_step(map, {BombAction::wait(), BombAction::wait(), BombAction::move(entry)});
  EXPECT_EQ(r.state.agents[2].position, entry);
  // Alpha cuts and leaves in different rounds; a cut while moving away still uses the start room.
  r = bomb_step(r.state, {BombAction::cut("red"), BombAction::move(vault), BombAction::wait()});
  EXPECT_EQ(r.points, 10);
  EXPECT_EQ(r.state.agents[1].position, vault);
}

TEST(Bomb, ParserDegradesToWait) {
  auto map = load_bomb_map(kSource + "/data/fixtures/one_bomb.json");
  EXPECT_EQ(parse_bomb_action("move vault", map).action.kind, BombAction::Kind::Move);
  EXPECT_EQ(parse_bomb_action("CUT Red", map).action.color, "red");
  const auto bad = parse_bomb_action("teleport home", map);
  EXPECT_EQ(bad.action.kind, BombAction::Kind::Wait);
  EXPECT_TRUE(bad.warning.has_value());
  EXPECT_TRUE(parse_bomb_action("move attic", map).warning.has_value());
}

TEST(Bomb, StepAfterLastRoundThrows) {
  auto map = load_bomb_map(kSource + "/data/fixtures/one_bomb.json");
  map.max_rounds = 1;
  auto r = bomb_step(map, {BombAction::wait(), BombAction::wait(), BombAction::wait()});
  EXPECT_THROW(bomb_step(r.state, {BombAction::wait(), BombAction::wait(), BombAction::wait()}), RuleViolation);
}

TEST(Bomb, ShippedMapsAreValid) {
  for (int i = 1; i <= 5; ++i) {
    const auto map = load_bomb_map(kSource + "/data/maps/map" + std::to_string(i) + ".json");
    EXPECT_NO_THROW(validate_bomb_map(map));
    EXPECT_GT(bomb_max_score(map), 0);
  }
}
