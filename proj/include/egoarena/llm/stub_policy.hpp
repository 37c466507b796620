#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egoarena/llm/chat.hpp"

namespace egoarena::llm {

// Rule-based stand-in for a model, selected with stub policy "heuristic".
// It reads the "Task: ..." line of the last user message and answers in the
// format that prompt asks for. Choices that need variety (MCQ letters, judge
// scores, occasional raises) come from a hash of the prompt and `seed`, so a
// given conversation always gets the same reply.
//
//   multiple-choice:  hashed option letter
//   guessing game:    belief = opponent's last choice (50 before round 1),
//                     answer = 0.8 x belief
//   hold'em:          predicts call; raises on one hash bucket in four when
//                     legal, otherwise calls or checks
//   blackjack:        hits below 17
//   bomb defusal:     cuts the next phase of a bomb in the room when it holds
//                     that color, otherwise moves to a hashed exit
//   dialogue:         fixed lines, leaves after its third message
//   judge:            hashed score 0..10
std::string heuristic_reply(const std::vector<ChatMessage>& messages, std::uint64_t seed);

}  // namespace egoarena::llm
