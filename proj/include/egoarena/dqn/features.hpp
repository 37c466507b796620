#pragma once

#include <vector>

#include "egoarena/engines/holdem.hpp"

namespace egoarena::dqn {

// Feature layout (length kFeatureSize = 112):
//   [0, 52)    own hole cards, one-hot by Card::index()
//   [52, 104)  community cards, one-hot by Card::index()
//   [104, 108) street one-hot: preflop, flop, turn, river (all zero once terminal)
//   108        own chips committed this street / starting stack
//   109        opponent chips committed this street / starting stack
//   110        pot / starting stack
//   111        raises this street / raise cap
inline constexpr int kFeatureSize = 112;

std::vector<double> encode_holdem_state(const HoldemState& state, int player);

}  // namespace egoarena::dqn
