#include "egoarena/dqn/features.hpp"

#include "egoarena/core/error.hpp"

namespace egoarena::dqn {

std::vector<double> encode_holdem_state(const HoldemState& s, int player) {
  if (player != 0 && player != 1) throw InvalidArgument("player must be seat 0 or 1");
  std::vector<double> f(kFeatureSize, 0.0);
  for (const auto& c : s.hands[player]) f[c.index()] = 1.0;
  for (const auto& c : s.community) f[52 + c.index()] = 1.0;
  switch (s.stage) {
    case HoldemStage::Preflop: f[104] = 1.0; break;
    case HoldemStage::Flop: f[105] = 1.0; break;
    case HoldemStage::Turn: f[106] = 1.0; break;
    case HoldemStage::River: f[107] = 1.0; break;
    default: break;
  }
  const double stack = static_cast<double>(s.config.stack);
  f[108] = s.committed[player] / stack;
  f[109] = s.committed[1 - player] / stack;
  f[110] = s.pot / stack;
  f[111] = static_cast<double>(s.raise_count) / s.config.max_raises;
  return f;
}

}  // namespace egoarena::dqn
