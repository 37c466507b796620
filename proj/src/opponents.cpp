#include "egoarena/opponents.hpp"

#include <algorithm>

#include "egoarena/dqn/features.hpp"

namespace egoarena {

namespace {
void check_round(int round) {
  if (round < 1 || round > kGuessRounds) throw InvalidArgument("round must be in [1, 10]: " + std::to_string(round));
}
}  // namespace

int level1_action(int round, int constant) {
  check_round(round);
  return constant;
}

int level2_action(int round) {
  check_round(round);
  return 50 - 5 * (round - 1);
}

double level3_action(double prev_agent, double prev_opponent) {
  const double gold = 0.8 * ((prev_agent + prev_opponent) / 2.0);
  return std::clamp(round1(gold), static_cast<double>(kGuessMin), static_cast<double>(kGuessMax));
}

GuessOpponent::GuessOpponent(int level, int constant) : level_(level), constant_(constant) {
  if (level < 1 || level > 3) throw InvalidArgument("opponent level must be 1, 2 or 3");
}

double GuessOpponent::act(int round, const std::vector<GuessRound>& history) const {
  switch (level_) {
    case 1: return level1_action(round, constant_);
    case 2: return level2_action(round);
    default:
      check_round(round);
      if (history.empty()) return kLevel3Opening;
      if (history.back().forfeit) return std::clamp(round1(history.back().gold), 1.0, 100.0);
      return level3_action(history.back().agent_guess, history.back().opponent_guess);
  }
}

HoldemAction dqn_policy_action(const dqn::QNetwork& net, const HoldemState& state, int player) {
  const auto q = net.forward(dqn::encode_holdem_state(state, player));
  return dqn::masked_argmax(q, holdem_legal_actions(state));
}

DqnPolicy::DqnPolicy(std::shared_ptr<const dqn::QNetwork> net, std::string label)
    : net_(std::move(net)), label_(std::move(label)) {
  if (!net_) throw InvalidArgument("DqnPolicy needs a network");
}

HoldemAction DqnPolicy::act(const HoldemState& state, int seat) { return dqn_policy_action(*net_, state, seat); }

HoldemAction RandomLegalPolicy::act(const HoldemState& state, int) {
  const auto options = holdem_legal_actions(state).to_vector();
  return options[rng_.below(options.size())];
}

HoldemAction CallingStationPolicy::act(const HoldemState& state, int) {
  return holdem_legal_actions(state).contains(HoldemAction::Call) ? HoldemAction::Call : HoldemAction::Check;
}

HoldemAction ScriptedHoldemPolicy::act(const HoldemState&, int) { return scripted_action(script_, next_++); }

}  // namespace egoarena
