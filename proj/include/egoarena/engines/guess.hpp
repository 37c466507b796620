#pragma once

#include <string>
#include <vector>

namespace egoarena {

// Two-player "guess 80% of the average" game (G0.8A), ten rounds.

inline constexpr int kGuessMin = 1;
inline constexpr int kGuessMax = 100;
inline constexpr int kGuessRounds = 10;

enum class GuessWinner { Agent, Opponent, Tie };

std::string to_string(GuessWinner w);

struct GuessRound {
  int agent_guess = 0;
  // Rule-based opponents may play fractional values (gold copying); stored at
  // one decimal place.
  double opponent_guess = 0;
  double gold = 0;
  GuessWinner winner = GuessWinner::Tie;
  // The agent gave no usable guess. agent_guess is 0, the gold is computed
  // from the opponent's choice alone and the opponent takes the round.
  bool forfeit = false;
};

struct GuessState {
  int round = 1;  // the round about to be played
  int max_rounds = kGuessRounds;
  std::vector<GuessRound> history;

  bool finished() const { return round > max_rounds; }
};

// 0.8 x (a + b) / 2. Both arguments must lie in [1, 100].
double guess_gold(int a, int b);
double guess_gold(double a, double b);

// Plays one round. The opponent guess is rounded to one decimal before use.
// Throws RuleViolation once the session is over and InvalidArgument for
// out-of-range guesses.
GuessState guess_step(const GuessState& state, int agent_guess, double opponent_guess);

// Records a round the agent forfeited (unparseable or missing guess).
GuessState guess_forfeit(const GuessState& state, double opponent_guess);

// Round half away from zero to one decimal place.
double round1(double x);

}  // namespace egoarena
