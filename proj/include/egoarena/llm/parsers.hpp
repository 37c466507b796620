#pragma once

#include <optional>
#include <string>

#include "egoarena/engines/blackjack.hpp"
#include "egoarena/engines/holdem.hpp"

namespace egoarena::llm {

// Result of a free-text parse. Parsers never throw on model output; a failed
// parse carries the reason.
template <typename T>
struct Parsed {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }
  static Parsed success(T v) { return {std::move(v), {}}; }
  static Parsed failure(std::string why) { return {std::nullopt, std::move(why)}; }
};

// Guess in [1, 100]. A line "Answer: N" takes precedence; otherwise the last
// standalone integer in range. Percentages and decimals are not candidates.
Parsed<int> parse_number_guess(const std::string& text);

// Predicted opponent number, rounded to one decimal. A "Belief: X" line takes
// precedence; otherwise the first number in the text that is not part of a
// percentage. A model asked for its belief tends to state it before any
// arithmetic, so the first number is used here.
Parsed<double> parse_belief(const std::string& text);

// Keyword match against the synonym table, case-insensitive. An "Action: X"
// line takes precedence; otherwise the last keyword in the text wins. The
// matched action must be legal.
//
//   fold:  fold, muck, give up
//   check: check, pass
//   call:  call, match
//   raise: raise, bet, re-raise
Parsed<HoldemAction> parse_holdem_action(const std::string& text, const HoldemActionSet& legal);

//   hit:   hit, draw, another card
//   stand: stand, stay, stick, hold
Parsed<BlackjackAction> parse_blackjack_action(const std::string& text);

// Same table as parse_holdem_action but on the "Prediction:" line, without a
// legality check. Used for the opponent-action belief in Hold'em.
Parsed<HoldemAction> parse_holdem_prediction(const std::string& text);

// Safe defaults applied by the harness after a failed parse.
HoldemAction holdem_safe_default(const HoldemActionSet& legal);  // Check if legal, else Fold
inline constexpr BlackjackAction kBlackjackSafeDefault = BlackjackAction::Stand;

// Option index in [0, n_options). Letter forms win over option text:
// "Answer: B", "answer is B", "(B)", "B)" or "B." at the start, a lone "B".
// Otherwise the option whose full text appears in the reply (only one may).
Parsed<int> parse_mcq_choice(const std::string& text, const std::vector<std::string>& options);

// Judge score 0..10 from "Score: N".
Parsed<int> parse_judge_score(const std::string& text);

// Value on the first line starting with `key:` (case-insensitive), trimmed.
std::optional<std::string> labelled_line(const std::string& text, const std::string& key);

}  // namespace egoarena::llm
