#include "egoarena/engines/guess.hpp"

#include <cmath>
#include <cstdlib>

#include "egoarena/core/error.hpp"

namespace egoarena {

std::string to_string(GuessWinner w) {
  switch (w) {
    case GuessWinner::Agent: return "agent";
    case GuessWinner::Opponent: return "opponent";
    case GuessWinner::Tie: return "tie";
  }
  return "tie";
}

double round1(double x) { return std::round(x * 10.0) / 10.0; }

namespace {

void check_bounds(double v) {
  if (!(v >= kGuessMin && v <= kGuessMax))
    throw InvalidArgument("guess out of range [1, 100]: " + std::to_string(v));
}

}  // namespace

double guess_gold(int a, int b) { return guess_gold(static_cast<double>(a), static_cast<double>(b)); }

double guess_gold(double a, double b) {
  check_bounds(a);
  check_bounds(b);
  return 0.8 * ((a + b) / 2.0);
}

GuessState guess_step(const GuessState& state, int agent_guess, double opponent_guess) {
  if (state.finished())
    throw RuleViolation("guess session already finished after round " + std::to_string(state.max_rounds));
  const double opp = round1(opponent_guess);
  check_bounds(agent_guess);
  check_bounds(opp);

  // Winner decided in exact integer arithmetic on tenths:
  // gold x 100 = 4 (a10 + b10), guess x 100 = 10 g10.
  const long a10 = static_cast<long>(agent_guess) * 10;
  const long b10 = std::lround(opp * 10.0);
  const long gold100 = 4 * (a10 + b10);
  const long da = std::labs(10 * a10 - gold100);
  const long db = std::labs(10 * b10 - gold100);

  GuessRound r;
  r.agent_guess = agent_guess;
  r.opponent_guess = opp;
  r.gold = static_cast<double>(gold100) / 100.0;
  r.winner = da < db ? GuessWinner::Agent : db < da ? GuessWinner::Opponent : GuessWinner::Tie;

  GuessState next = state;
  next.history.push_back(r);
  ++next.round;
  return next;
}

GuessState guess_forfeit(const GuessState& state, double opponent_guess) {
  if (state.finished())
    throw RuleViolation("guess session already finished after round " + std::to_string(state.max_rounds));
  const double opp = round1(opponent_guess);
  check_bounds(opp);
  GuessRound r;
  r.opponent_guess = opp;
  r.gold = round1(0.8 * opp);
  r.winner = GuessWinner::Opponent;
  r.forfeit = true;
  GuessState next = state;
  next.history.push_back(r);
  ++next.round;
  return next;
}

}  // namespace egoarena
