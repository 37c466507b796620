#include "egoarena/engines/rps.hpp"

namespace egoarena {

std::string to_string(RpsMove m) {
  switch (m) {
    case RpsMove::Rock: return "rock";
    case RpsMove::Paper: return "paper";
    case RpsMove::Scissors: return "scissors";
  }
  return "?";
}

std::string to_string(RpsOutcome o) {
  switch (o) {
    case RpsOutcome::First: return "first";
    case RpsOutcome::Second: return "second";
    case RpsOutcome::Tie: return "tie";
  }
  return "?";
}

std::optional<RpsMove> rps_move_from_string(const std::string& name) {
  if (name == "rock") return RpsMove::Rock;
  if (name == "paper") return RpsMove::Paper;
  if (name == "scissors") return RpsMove::Scissors;
  return std::nullopt;
}

bool RpsRules::beats(RpsMove a, RpsMove b) const {
  // Standard cycle: each move beats the one listed before it, mod 3
  // (paper > rock, scissors > paper, rock > scissors).
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  if (ia == ib) return false;
  const bool standard = (ia + 2) % 3 == ib;
  return variant == RpsVariant::Standard ? standard : !standard;
}

RpsOutcome rps_outcome(const RpsRules& rules, RpsMove a, RpsMove b) {
  if (a == b) return RpsOutcome::Tie;
  return rules.beats(a, b) ? RpsOutcome::First : RpsOutcome::Second;
}

}  // namespace egoarena
