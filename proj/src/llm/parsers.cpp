#include "egoarena/llm/parsers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <vector>

namespace egoarena::llm {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct NumberToken {
  double value;
  bool integral;
  bool percent;
};

// Numbers not glued to letters ("G0.8A", "level2" are skipped).
std::vector<NumberToken> numbers_in(const std::string& text) {
  static const std::regex re(R"((-?)(\d+)(\.\d+)?(%?))");
  std::vector<NumberToken> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const auto begin = static_cast<std::size_t>(m.position(0));
    const auto end = begin + static_cast<std::size_t>(m.length(0));
    if (begin > 0 && std::isalnum(static_cast<unsigned char>(text[begin - 1]))) continue;
    if (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) continue;
    const double v = std::stod(m.str(1) + m.str(2) + m.str(3));
    out.push_back({v, !m[3].matched, m[4].length() > 0});
  }
  return out;
}

std::optional<int> last_guess_in(const std::string& text) {
  std::optional<int> found;
  for (const auto& n : numbers_in(text))
    if (n.integral && !n.percent && n.value >= 1 && n.value <= 100) found = static_cast<int>(n.value);
  return found;
}

struct Keyword {
  std::regex pattern;
  int action;
};

Keyword keyword(const char* word, int action) { return {std::regex(std::string("\\b") + word + "\\b"), action}; }

// Last keyword (by position) from the table, or nullopt.
std::optional<int> last_keyword(const std::string& text, const std::vector<Keyword>& table) {
  const std::string t = lower(text);
  std::optional<int> best;
  std::ptrdiff_t best_pos = -1;
  for (const auto& k : table) {
    for (auto it = std::sregex_iterator(t.begin(), t.end(), k.pattern); it != std::sregex_iterator(); ++it) {
      if (it->position(0) > best_pos) {
        best_pos = it->position(0);
        best = k.action;
      }
    }
  }
  return best;
}

const std::vector<Keyword>& holdem_table() {
  static const std::vector<Keyword> t = {
      keyword("fold", 0),  keyword("muck", 0), keyword("give up", 0), keyword("check", 1), keyword("pass", 1),
      keyword("call", 2),  keyword("match", 2), keyword("raise", 3),  keyword("bet", 3),   keyword("re-raise", 3),
  };
  return t;
}

const std::vector<Keyword>& blackjack_table() {
  static const std::vector<Keyword> t = {
      keyword("hit", 0),   keyword("draw", 0),  keyword("another card", 0), keyword("stand", 1),
      keyword("stay", 1),  keyword("stick", 1), keyword("hold", 1),
  };
  return t;
}

// The labelled line is searched first, then the whole text.
std::optional<int> keyword_with_label(const std::string& text, const std::string& label,
                                      const std::vector<Keyword>& table) {
  if (auto line = labelled_line(text, label))
    if (auto k = last_keyword(*line, table)) return k;
  return last_keyword(text, table);
}

}  // namespace

std::optional<std::string> labelled_line(const std::string& text, const std::string& key) {
  const std::string t = lower(text);
  const std::string needle = lower(key) + ":";
  std::size_t pos = std::string::npos;
  for (std::size_t p = t.find(needle); p != std::string::npos; p = t.find(needle, p + 1))
    if (p == 0 || !std::isalpha(static_cast<unsigned char>(t[p - 1]))) pos = p;
  if (pos == std::string::npos) return std::nullopt;
  const std::size_t start = pos + needle.size();
  const std::size_t end = text.find('\n', start);
  return trim(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
}

Parsed<int> parse_number_guess(const std::string& text) {
  if (auto line = labelled_line(text, "answer")) {
    if (auto g = last_guess_in(*line)) return Parsed<int>::success(*g);
    return Parsed<int>::failure("answer line holds no integer between 1 and 100");
  }
  if (auto g = last_guess_in(text)) return Parsed<int>::success(*g);
  return Parsed<int>::failure("no integer between 1 and 100");
}

Parsed<double> parse_belief(const std::string& text) {
  auto first_number = [](const std::string& s) -> std::optional<double> {
    for (const auto& n : numbers_in(s))
      if (!n.percent) return std::round(n.value * 10.0) / 10.0;
    return std::nullopt;
  };
  if (auto line = labelled_line(text, "belief"))
    if (auto v = first_number(*line)) return Parsed<double>::success(*v);
  if (auto v = first_number(text)) return Parsed<double>::success(*v);
  return Parsed<double>::failure("no predicted number");
}

Parsed<HoldemAction> parse_holdem_action(const std::string& text, const HoldemActionSet& legal) {
  const auto k = keyword_with_label(text, "action", holdem_table());
  if (!k) return Parsed<HoldemAction>::failure("no poker action keyword");
  const auto a = static_cast<HoldemAction>(*k);
  if (!legal.contains(a)) return Parsed<HoldemAction>::failure(to_string(a) + " is not legal here");
  return Parsed<HoldemAction>::success(a);
}

Parsed<HoldemAction> parse_holdem_prediction(const std::string& text) {
  auto line = labelled_line(text, "prediction");
  if (!line) return Parsed<HoldemAction>::failure("no prediction line");
  const auto k = last_keyword(*line, holdem_table());
  if (!k) return Parsed<HoldemAction>::failure("no poker action keyword in prediction");
  return Parsed<HoldemAction>::success(static_cast<HoldemAction>(*k));
}

Parsed<BlackjackAction> parse_blackjack_action(const std::string& text) {
  const auto k = keyword_with_label(text, "action", blackjack_table());
  if (!k) return Parsed<BlackjackAction>::failure("no hit/stand keyword");
  return Parsed<BlackjackAction>::success(*k == 0 ? BlackjackAction::Hit : BlackjackAction::Stand);
}

HoldemAction holdem_safe_default(const HoldemActionSet& legal) {
  return legal.contains(HoldemAction::Check) ? HoldemAction::Check : HoldemAction::Fold;
}

Parsed<int> parse_mcq_choice(const std::string& text, const std::vector<std::string>& options) {
  const int n = static_cast<int>(options.size());
  if (n < 2) return Parsed<int>::failure("fewer than two options");
  auto letter_index = [n](char c) -> std::optional<int> {
    const int i = std::toupper(static_cast<unsigned char>(c)) - 'A';
    if (i >= 0 && i < n) return i;
    return std::nullopt;
  };

  if (auto line = labelled_line(text, "answer")) {
    static const std::regex re(R"(^\(?([A-Za-z])\)?(?:[^A-Za-z]|$))");
    std::smatch m;
    if (std::regex_search(*line, m, re))
      if (auto i = letter_index(m.str(1)[0])) return Parsed<int>::success(*i);
  }
  static const std::vector<std::regex> patterns = {
      std::regex(R"([Aa]nswer is:?\s*\(?([A-Z])\b)"),
      std::regex(R"(\(([A-Z])\))"),
      std::regex(R"(^\s*([A-Z])[\).:](?:\s|$))"),
      std::regex(R"(^\s*([A-Za-z])\s*$)"),
      std::regex(R"([Oo]ption\s+([A-Za-z])\b)"),
  };
  for (const auto& re : patterns) {
    std::smatch m;
    if (std::regex_search(text, m, re))
      if (auto i = letter_index(m.str(1)[0])) return Parsed<int>::success(*i);
  }

  const std::string t = lower(text);
  std::vector<int> hits;
  for (int i = 0; i < n; ++i)
    if (!options[i].empty() && t.find(lower(options[i])) != std::string::npos) hits.push_back(i);
  // Drop options whose text is contained in another matched option.
  std::vector<int> maximal;
  for (int i : hits) {
    bool contained = false;
    for (int j : hits)
      if (i != j && options[j].size() > options[i].size() &&
          lower(options[j]).find(lower(options[i])) != std::string::npos)
        contained = true;
    if (!contained) maximal.push_back(i);
  }
  if (maximal.size() == 1) return Parsed<int>::success(maximal.front());
  if (maximal.size() > 1) return Parsed<int>::failure("reply matches several options");
  return Parsed<int>::failure("no option letter or option text");
}

Parsed<int> parse_judge_score(const std::string& text) {
  auto line = labelled_line(text, "score");
  if (!line) return Parsed<int>::failure("no score line");
  for (const auto& n : numbers_in(*line)) {
    if (n.integral && n.value >= 0 && n.value <= 10) return Parsed<int>::success(static_cast<int>(n.value));
    break;
  }
  return Parsed<int>::failure("score line without an integer 0-10");
}

}  // namespace egoarena::llm
