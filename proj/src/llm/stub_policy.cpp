#include "egoarena/llm/stub_policy.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "egoarena/llm/prompts.hpp"

namespace egoarena::llm {

namespace {

std::uint64_t hash(const std::string& text, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string after(const std::string& text, const std::string& prefix) {
  const auto p = text.find(prefix);
  if (p == std::string::npos) return {};
  const auto start = p + prefix.size();
  const auto end = text.find('\n', start);
  return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

std::vector<std::string> split_list(std::string s) {
  if (!s.empty() && s.back() == '.') s.pop_back();
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b));
  }
  return out;
}

std::string mcq(const std::string& u, std::uint64_t h) {
  static const std::regex option(R"((?:^|\n)([A-Z])\) )");
  int n = 0;
  for (auto it = std::sregex_iterator(u.begin(), u.end(), option); it != std::sregex_iterator(); ++it) ++n;
  if (n == 0) return "I am not sure.";
  return "Answer: " + option_letter(static_cast<int>(h % static_cast<std::uint64_t>(n)));
}

std::string guess(const std::string& u) {
  static const std::regex opp(R"(the opponent chose (\d+(?:\.\d+)?))");
  double belief = 50.0;
  for (auto it = std::sregex_iterator(u.begin(), u.end(), opp); it != std::sregex_iterator(); ++it)
    belief = std::stod(it->str(1));
  long answer = std::lround(0.8 * belief);
  answer = std::clamp(answer, 1L, 100L);
  std::ostringstream out;
  out << "The opponent will probably repeat its last choice.\nBelief: " << belief << "\nAnswer: " << answer;
  return out.str();
}

std::string holdem(const std::string& u, std::uint64_t h) {
  const auto legal = split_list(after(u, "Legal actions: "));
  auto has = [&](const std::string& a) { return std::find(legal.begin(), legal.end(), a) != legal.end(); };
  std::string action = has("check") ? "check" : "call";
  if (h % 4 == 0 && has("raise")) action = "raise";
  if (!has(action)) action = legal.empty() ? "fold" : legal.front();
  return "Prediction: call\nAction: " + action;
}

std::string blackjack(const std::string& u) {
  static const std::regex value(R"(\(value (\d+))");
  std::smatch m;
  if (std::regex_search(u, m, value) && std::stoi(m.str(1)) < 17) return "Action: hit";
  return "Action: stand";
}

std::string bomb(const std::string& u, std::uint64_t h) {
  const auto cutters = split_list(after(u, "Your cutters: "));
  static const std::regex bomb_line(R"(Bomb \S+ has \d+ phase\(s\) left, in order: ([^,.\n]+))");
  for (auto it = std::sregex_iterator(u.begin(), u.end(), bomb_line); it != std::sregex_iterator(); ++it) {
    const std::string next = it->str(1);
    if (std::find(cutters.begin(), cutters.end(), next) != cutters.end())
      return "Message: cutting " + next + " here.\nAction: cut " + next;
  }
  const auto exits = split_list(after(u, "Connected rooms: "));
  if (exits.empty() || exits.front() == "none") return "Message: waiting.\nAction: wait";
  const std::string target = exits[h % exits.size()];
  return "Message: heading to " + target + ".\nAction: move " + target;
}

std::string dialogue(const std::string& u, std::uint64_t h) {
  const std::string me = [&] {
    std::string s = after(u, "Write your next message as ");
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }();
  int mine = 0;
  std::stringstream ss(u);
  std::string line;
  while (std::getline(ss, line))
    if (!me.empty() && line.rfind(me + ": ", 0) == 0) ++mine;
  static const char* lines[] = {
      "Hello, it is good to see you.",
      "I was hoping we could talk about something that matters to me.",
      "I understand your point. Maybe we can find a middle ground.",
      "Thank you for listening.",
  };
  if (mine >= 3) return std::string("Thank you, I have to go now. ") + kLeaveToken;
  return lines[(h + static_cast<std::uint64_t>(mine)) % 4];
}

std::string judge(std::uint64_t h) {
  return "Score: " + std::to_string(h % 11) + "\nThe participant made some progress towards the goal.";
}

}  // namespace

std::string heuristic_reply(const std::vector<ChatMessage>& messages, std::uint64_t seed) {
  std::string u;
  for (auto it = messages.rbegin(); it != messages.rend(); ++it)
    if (it->role == Role::User) {
      u = it->content;
      break;
    }
  const std::uint64_t h = hash(u, seed);
  const std::string task = after(u, "Task: ");
  if (task == "multiple-choice question") return mcq(u, h);
  if (task == "number guessing game") return guess(u);
  if (task == "limit texas hold'em") return holdem(u, h);
  if (task == "blackjack") return blackjack(u);
  if (task == "bomb defusal") return bomb(u, h);
  if (task == "social dialogue") return dialogue(u, h);
  if (task == "goal completion judgement") return judge(h);
  // The judge re-ask has no Task line.
  if (u.find("Score:") != std::string::npos) return judge(h);
  return "I am not sure.";
}

}  // namespace egoarena::llm
