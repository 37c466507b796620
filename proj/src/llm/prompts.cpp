#include "egoarena/llm/prompts.hpp"

#include <cstdio>
#include <sstream>

namespace egoarena::llm {

namespace {

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

// Integers without a decimal part, fractional values at one decimal.
std::string fmt_number(double v) {
  if (v == static_cast<long>(v)) return std::to_string(static_cast<long>(v));
  return fmt1(v);
}

std::string cards_text(const std::vector<Card>& cards) {
  std::string out;
  for (const auto& c : cards) {
    if (!out.empty()) out += ' ';
    out += to_display(c);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

std::string option_letter(int i) { return std::string(1, static_cast<char>('A' + i)); }

std::vector<ChatMessage> mcq_prompt(const ScenarioItem& item) {
  std::ostringstream u;
  u << "Task: multiple-choice question\n";
  if (!item.story.empty()) u << item.story << "\n\n";
  u << "Question: " << item.question << "\nOptions:\n";
  for (std::size_t i = 0; i < item.options.size(); ++i)
    u << option_letter(static_cast<int>(i)) << ") " << item.options[i] << "\n";
  u << "Reply with the letter of the correct option on a line 'Answer: <letter>'.";
  return {system_message(item.system_message), user_message(u.str())};
}

std::vector<ChatMessage> guess_prompt(const GuessState& state) {
  const std::string sys =
      "You are playing a number guessing game against one other player over " + std::to_string(state.max_rounds) +
      " rounds. In every round each player secretly chooses a number between 1 and 100. The gold number is 80% of "
      "the average of the two choices, and whoever is closer to the gold number wins the round.";
  std::ostringstream u;
  u << "Task: number guessing game\n";
  u << "Round " << state.round << " of " << state.max_rounds << ".\n";
  if (state.history.empty()) {
    u << "No rounds have been played yet.\n";
  } else {
    u << "History:\n";
    for (std::size_t i = 0; i < state.history.size(); ++i) {
      const auto& r = state.history[i];
      const std::string winner =
          r.winner == GuessWinner::Agent ? "you" : r.winner == GuessWinner::Opponent ? "opponent" : "tie";
      u << "  Round " << i + 1 << ": ";
      if (r.forfeit)
        u << "you gave no valid choice";
      else
        u << "you chose " << r.agent_guess;
      u << ", the opponent chose "
        << fmt_number(r.opponent_guess) << ", gold " << fmt1(r.gold) << ", winner: " << winner << "\n";
    }
  }
  u << "First, what number do you think the opponent will choose this round? Reply on a line "
       "'Belief: <number>'.\n";
  u << "Then give your own choice on a line 'Answer: <number>'.";
  return {system_message(sys), user_message(u.str())};
}

std::vector<ChatMessage> holdem_prompt(const HoldemState& s, int seat, int hand, int hands) {
  const std::string sys =
      "You are playing heads-up Limit Texas Hold'em against one opponent. Each player is dealt two private cards; "
      "five community cards are dealt face up in stages: a three-card flop, then the turn, then the river. Bets are "
      "fixed: " +
      std::to_string(s.config.small_bet) + " chips preflop and on the flop, " + std::to_string(s.config.big_bet) +
      " chips on the turn and river, at most " + std::to_string(s.config.max_raises) +
      " raises per round. The available actions are fold, check, call and raise.";
  const int opp = 1 - seat;
  std::ostringstream u;
  u << "Task: limit texas hold'em\n";
  u << "Hand " << hand << " of " << hands << ". Stage: " << to_string(s.stage) << ".\n";
  u << "You are " << (s.button == seat ? "the dealer (small blind)" : "the big blind") << ".\n";
  u << "Your hand: " << to_display(s.hands[seat][0]) << " " << to_display(s.hands[seat][1]) << "\n";
  u << "Community cards: " << cards_text(s.community) << "\n";
  u << "Pot: " << s.pot << " chips. Your chips in this round: " << s.committed[seat]
    << ". Opponent chips in this round: " << s.committed[opp] << ".\n";
  u << "Your stack: " << s.stacks[seat] << ". Opponent stack: " << s.stacks[opp] << ".\n";
  u << "Action history:";
  if (s.history.empty()) u << " none";
  for (const auto& e : s.history)
    u << "\n  " << to_string(e.stage) << ": " << (e.player == seat ? "you" : "opponent") << " " << to_string(e.action);
  u << "\nLegal actions: " << to_string(holdem_legal_actions(s)) << "\n";
  u << "First predict the opponent's next action on a line 'Prediction: <fold|check|call|raise>'.\n";
  u << "Then choose your action on a line 'Action: <one of the legal actions>'.";
  return {system_message(sys), user_message(u.str())};
}

std::vector<ChatMessage> blackjack_prompt(const BlackjackState& s, int hand, int hands) {
  const std::string sys =
      "You are the player in a game of Blackjack against a dealer. The goal is to beat the dealer without exceeding "
      "21 points. Number cards count their value, face cards count 10, and an ace counts 11 or 1. The dealer draws "
      "until reaching at least 17. You may hit (take a card) or stand (end your turn).";
  const auto value = blackjack_hand_value(s.player_hand);
  std::ostringstream u;
  u << "Task: blackjack\n";
  u << "Hand " << hand << " of " << hands << ".\n";
  u << "Your cards: " << cards_text(s.player_hand) << " (value " << value.value << (value.soft ? ", soft" : "")
    << ")\n";
  u << "Dealer's face-up card: " << to_display(s.dealer_upcard) << "\n";
  u << "Dealer's hidden card: unknown\n";
  u << "Choose hit or stand. Reply on a line 'Action: <hit|stand>'.";
  return {system_message(sys), user_message(u.str())};
}

std::vector<ChatMessage> bomb_prompt(const BombMap& map, int agent, const std::vector<TeamMessage>& inbox) {
  const std::string sys =
      "You are " + map.agents[agent].name +
      ", one of three specialists defusing bombs together. Each bomb has a sequence of colored phases that must be "
      "cut in order with a wire cutter of the matching color, by someone standing in the bomb's room. Every "
      "processed phase earns the team 10 points. The mission lasts " +
      std::to_string(map.max_rounds) +
      " rounds; each round every member sends one message and takes one action: 'move <room>' to a connected "
      "room, 'cut <color>', or 'wait'.";
  std::ostringstream u;
  u << "Task: bomb defusal\n" << bomb_observation(map, agent);
  u << "Messages from teammates:";
  if (inbox.empty()) u << " none";
  for (const auto& m : inbox) u << "\n  " << m.from << ": " << m.text;
  u << "\nReply with two lines:\nMessage: <text for your teammates, or none>\nAction: <move ROOM | cut COLOR | wait>";
  return {system_message(sys), user_message(u.str())};
}

std::vector<ChatMessage> dialogue_prompt(const DialogueScenario& scenario, int speaker,
                                         const std::vector<DialogueTurn>& so_far) {
  const Character& me = scenario.characters[speaker];
  const Character& other = scenario.characters[1 - speaker];
  std::ostringstream sys;
  sys << "You are " << me.name << ". " << me.profile << "\nSetting: " << scenario.setting
      << "\nYou are talking with " << other.name << ".\nYour private social goal: " << me.goal
      << "\nStay in character. When you want to end the conversation, include " << kLeaveToken << " in your reply.";
  std::ostringstream u;
  u << "Task: social dialogue\nConversation so far:";
  if (so_far.empty()) u << " (you speak first)";
  for (const auto& t : so_far) u << "\n" << t.name << ": " << t.text;
  u << "\nWrite your next message as " << me.name << ".";
  return {system_message(sys.str()), user_message(u.str())};
}

std::vector<ChatMessage> judge_prompt(const DialogueScenario& scenario, int character, const Transcript& transcript) {
  const Character& c = scenario.characters[character];
  const std::string sys =
      "You are an impartial judge of social interactions. You rate how fully a participant achieved their private "
      "social goal.";
  std::ostringstream u;
  u << "Task: goal completion judgement\nSetting: " << scenario.setting << "\nParticipant: " << c.name
    << "\nSocial goal: " << c.goal << "\nTranscript:";
  for (const auto& t : transcript.turns) u << "\n" << t.name << ": " << t.text;
  u << "\nRubric: 0 means the goal was not pursued or was made impossible; 5 means partial progress; 10 means the "
       "goal was fully achieved.\n";
  u << "Reply with a line 'Score: <integer 0-10>' followed by one sentence of justification.";
  return {system_message(sys), user_message(u.str())};
}

ChatMessage judge_reask() {
  return user_message("Your reply did not contain a score. Reply with exactly one line 'Score: <integer 0-10>'.");
}

}  // namespace egoarena::llm
