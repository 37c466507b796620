#pragma once

#include <string>
#include <vector>

#include "egoarena/engines/blackjack.hpp"
#include "egoarena/engines/bomb.hpp"
#include "egoarena/engines/guess.hpp"
#include "egoarena/engines/holdem.hpp"
#include "egoarena/harness/types.hpp"
#include "egoarena/llm/chat.hpp"

namespace egoarena::llm {

// Scenario prompt templates. The original study's prompts were not released;
// these are reconstructions and are versioned so logs can say which wording
// produced them. Every user message starts with a "Task: ..." line.
inline constexpr const char* kPromptVersion = "v1";

inline constexpr const char* kLeaveToken = "[leave]";

std::vector<ChatMessage> mcq_prompt(const ScenarioItem& item);

// Asks for a belief line ("Belief: N") and a guess line ("Answer: N").
std::vector<ChatMessage> guess_prompt(const GuessState& state);

// Mirrors the hand layout of the worked Hold'em case: hole cards, community
// cards, pot, stacks, action history, legal actions. Asks for a prediction of
// the opponent's next action and the agent's own action.
std::vector<ChatMessage> holdem_prompt(const HoldemState& state, int seat, int hand, int hands);

std::vector<ChatMessage> blackjack_prompt(const BlackjackState& state, int hand, int hands);

struct TeamMessage {
  std::string from;
  std::string text;
};

std::vector<ChatMessage> bomb_prompt(const BombMap& map, int agent, const std::vector<TeamMessage>& inbox);

std::vector<ChatMessage> dialogue_prompt(const DialogueScenario& scenario, int speaker,
                                         const std::vector<DialogueTurn>& so_far);

std::vector<ChatMessage> judge_prompt(const DialogueScenario& scenario, int character, const Transcript& transcript);

// Re-ask appended after an unparseable judge reply.
ChatMessage judge_reask();

// Letter for option i: A, B, C, ...
std::string option_letter(int i);

}  // namespace egoarena::llm
