#pragma once

#include <optional>
#include <string>

namespace egoarena {

enum class RpsMove { Rock, Paper, Scissors };
enum class RpsVariant { Standard, Counterfactual };
enum class RpsOutcome { First, Second, Tie };

std::string to_string(RpsMove m);
std::string to_string(RpsOutcome o);
std::optional<RpsMove> rps_move_from_string(const std::string& name);

// Standard: rock > scissors > paper > rock.
// Counterfactual: every non-tie pair inverted (scissors > rock, paper >
// scissors, rock > paper).
struct RpsRules {
  RpsVariant variant = RpsVariant::Standard;

  bool beats(RpsMove a, RpsMove b) const;
};

RpsOutcome rps_outcome(const RpsRules& rules, RpsMove a, RpsMove b);

}  // namespace egoarena
