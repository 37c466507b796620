#include "egoarena/perspective.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string_view>
#include <utility>

namespace egoarena {

namespace {

struct Token {
  std::string text;
  bool word = false;
};

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

bool starts_upper(const std::string& s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }

// Words are letter runs with internal apostrophes (ASCII or U+2019) or hyphens.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_alpha(text[i])) {
      std::size_t j = i;
      while (j < text.size()) {
        if (is_alpha(text[j])) {
          ++j;
        } else if ((text[j] == '\'' || text[j] == '-') && j + 1 < text.size() && is_alpha(text[j + 1])) {
          ++j;
        } else if (text.compare(j, 3, "\xE2\x80\x99") == 0 && j + 3 < text.size() && is_alpha(text[j + 3])) {
          j += 3;
        } else {
          break;
        }
      }
      out.push_back({text.substr(i, j - i), true});
      i = j;
    } else {
      std::size_t j = i;
      while (j < text.size() && !is_alpha(text[j])) ++j;
      out.push_back({text.substr(i, j - i), false});
      i = j;
    }
  }
  return out;
}

bool ends_sentence(const Token& t) {
  return !t.word && t.text.find_first_of(".!?") != std::string::npos;
}

// Splits "Sally's" / "Sally’s" into ("Sally", true).
std::pair<std::string, bool> strip_possessive(const std::string& w) {
  if (w.size() > 2 && (w.ends_with("'s") || w.ends_with("'S"))) return {w.substr(0, w.size() - 2), true};
  if (w.size() > 4 && w.ends_with("\xE2\x80\x99s")) return {w.substr(0, w.size() - 4), true};
  return {w, false};
}

constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kAgreement = {{
    {"is", "are"},
    {"was", "were"},
    {"has", "have"},
    {"does", "do"},
    {"isn't", "aren't"},
    {"wasn't", "weren't"},
    {"hasn't", "haven't"},
    {"doesn't", "don't"},
}};

std::optional<std::string> agreement_form(const std::string& w) {
  const std::string lw = lower(w);
  for (const auto& [from, to] : kAgreement)
    if (lw == from) return std::string(to);
  return std::nullopt;
}

// Words after which a name begins a clause, i.e. is a subject.
constexpr std::array<std::string_view, 32> kClauseOpeners = {
    "that",    "then",     "when",   "while",  "because", "so",     "after",  "before",
    "think",   "thinks",   "thought", "believe", "believes", "believed", "know", "knows",
    "knew",    "where",    "what",   "which",  "who",     "why",    "how",    "if",
    "will",    "would",    "did",    "can",    "could",   "should", "might",  "but",
};

constexpr std::array<std::string_view, 14> kAdverbs = {"always", "never",  "often",  "also",    "still",
                                                        "then",   "quickly", "really", "usually", "now",
                                                        "later",  "actually", "already", "just"};

constexpr std::array<std::string_view, 16> kNotVerbs = {"always", "perhaps", "towards", "afterwards", "across", "its",
                                                         "this",   "his",     "hers",    "yes",        "as",     "thus",
                                                         "us",     "less",    "unless",  "besides"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& set, const std::string& w) {
  return std::find(set.begin(), set.end(), lower(w)) != set.end();
}

bool is_aux(const std::string& w) { return agreement_form(w).has_value(); }

bool looks_third_person_verb(const std::string& w) {
  const std::string lw = lower(w);
  if (lw.size() < 3 || lw.back() != 's' || starts_upper(w)) return false;
  if (lw.ends_with("ss") || lw.ends_with("us") || lw.ends_with("'s")) return false;
  return !in(kNotVerbs, lw);
}

std::string base_form(const std::string& w) {
  const std::string lw = lower(w);
  if (auto a = agreement_form(lw)) return *a;
  if (lw == "goes") return "go";
  if (lw.size() > 4 && lw.ends_with("ies")) return lw.substr(0, lw.size() - 3) + "y";
  for (std::string_view suffix : {"ches", "shes", "sses", "xes", "zes", "oes"})
    if (lw.ends_with(suffix)) return lw.substr(0, lw.size() - 2);
  return lw.substr(0, lw.size() - 1);
}

bool is_pronoun(const std::string& w) {
  const std::string lw = lower(w);
  return lw == "she" || lw == "he" || lw == "her" || lw == "his" || lw == "him";
}

}  // namespace

std::string build_system_message(const std::string& target, const std::string& background) {
  std::string msg = "You are " + target + ".";
  if (!background.empty()) msg += " " + background;
  msg += " You have personally experienced the following events.";
  return msg;
}

int count_name(const std::string& text, const std::string& name) {
  if (name.empty()) return 0;
  const std::string t = lower(text), n = lower(name);
  int count = 0;
  for (std::size_t pos = t.find(n); pos != std::string::npos; pos = t.find(n, pos + 1)) {
    const bool left_ok = pos == 0 || !is_alpha(t[pos - 1]);
    const bool right_ok = pos + n.size() >= t.size() || !is_alpha(t[pos + n.size()]);
    if (left_ok && right_ok) ++count;
  }
  return count;
}

std::string convert_text(const std::string& text, const std::string& target, const std::string& field,
                         ConversionReport* report) {
  auto tokens = tokenize(text);
  auto note = [&](std::size_t first, std::size_t last, const std::string& reason) {
    if (!report) return;
    std::string sentence;
    for (std::size_t k = first; k < last && k < tokens.size(); ++k) sentence += tokens[k].text;
    report->entries.push_back({field, sentence, reason});
  };

  std::size_t sentence_begin = 0;
  while (sentence_begin < tokens.size()) {
    std::size_t sentence_end = sentence_begin;
    while (sentence_end < tokens.size() && !ends_sentence(tokens[sentence_end])) ++sentence_end;
    if (sentence_end < tokens.size()) ++sentence_end;  // include the terminator

    std::vector<std::size_t> words;
    for (std::size_t k = sentence_begin; k < sentence_end; ++k)
      if (tokens[k].word) words.push_back(k);
    const std::vector<std::string> original = [&] {
      std::vector<std::string> w;
      for (auto k : words) w.push_back(tokens[k].text);
      return w;
    }();

    bool target_is_subject = false;
    bool target_seen = false;
    bool pronoun_seen = false;
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      Token& tok = tokens[words[wi]];
      const bool first = wi == 0;
      if (is_pronoun(original[wi])) pronoun_seen = true;

      const auto [stem, possessive] = strip_possessive(original[wi]);
      if (stem != target) {
        const std::string lw = lower(original[wi]);
        if ((lw == "herself" || lw == "himself") && target_is_subject) tok.text = "yourself";
        continue;
      }
      target_seen = true;
      if (possessive) {
        tok.text = first ? "Your" : "your";
        continue;
      }
      tok.text = first ? "You" : "you";

      const std::string prev = wi > 0 ? lower(original[wi - 1]) : std::string();
      const bool inverted = wi > 0 && is_aux(prev);
      // After "and", a following singular verb means a new clause: a compound
      // subject ("Anne and Sally") would already take the plural form.
      const bool singular_verb_follows =
          wi + 1 < words.size() && (is_aux(original[wi + 1]) || looks_third_person_verb(original[wi + 1]));
      const bool subject = first || inverted || in(kClauseOpeners, prev) || (prev == "and" && singular_verb_follows);
      if (!subject) {
        if (singular_verb_follows) note(sentence_begin, sentence_end, "name in object position followed by a verb");
        continue;
      }
      target_is_subject = true;
      if (inverted) {
        Token& aux = tokens[words[wi - 1]];
        const std::string form = *agreement_form(original[wi - 1]);
        aux.text = starts_upper(original[wi - 1]) ? capitalize(form) : form;
        continue;
      }
      // Skip adverbs between the subject and its verb ("Sally always likes").
      std::size_t vi = wi + 1;
      while (vi < words.size() && in(kAdverbs, original[vi])) ++vi;
      if (vi >= words.size()) continue;
      const std::string& verb = original[vi];
      if (lower(verb) == "and") continue;  // compound subject takes plural agreement already
      if (is_aux(verb) || looks_third_person_verb(verb)) tokens[words[vi]].text = base_form(verb);
    }
    if (target_seen && pronoun_seen)
      note(sentence_begin, sentence_end, "third-person pronoun may refer to the target");
    sentence_begin = sentence_end;
  }

  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

std::string convert_story(const std::string& story, const std::string& target, ConversionReport* report) {
  if (count_name(story, target) == 0) throw ConversionError("story", "target '" + target + "' does not occur");
  return convert_text(story, target, "story", report);
}

std::string convert_question(const std::string& question, const std::string& target, ConversionReport* report) {
  if (count_name(question, target) == 0)
    throw ConversionError("question", "target '" + target + "' does not occur");
  return convert_text(question, target, "question", report);
}

std::vector<std::string> agreement_violations(const std::string& text) {
  std::vector<std::string> found;
  auto tokens = tokenize(text);
  std::vector<std::string> words;
  for (const auto& t : tokens)
    if (t.word) words.push_back(lower(t.text));
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (words[i] == "you" && is_aux(words[i + 1])) found.push_back("you " + words[i + 1]);
    if (is_aux(words[i]) && words[i + 1] == "you") found.push_back(words[i] + " you");
  }
  return found;
}

void validate_first_person(const FirstPersonItem& item, const std::string& target) {
  if (item.system_message.empty()) throw ConversionError("system_message", "empty");
  auto check = [&](const std::string& field, const std::string& text) {
    if (count_name(text, target) > 0)
      throw ConversionError(field, "target '" + target + "' still present: \"" + text + "\"");
    const auto bad = agreement_violations(text);
    if (!bad.empty()) throw ConversionError(field, "second-person agreement error '" + bad.front() + "'");
  };
  check("story", item.story);
  check("question", item.question);
  for (std::size_t i = 0; i < item.options.size(); ++i) check("option " + std::to_string(i), item.options[i]);

  // The system message names the target ("You are Sally.") but must not talk
  // about the target in the third person.
  const std::string sys = lower(item.system_message);
  const std::string name = lower(target);
  for (const std::string suffix : {" is", " was", " has", "'s"}) {
    if (sys.find(name + suffix) != std::string::npos)
      throw ConversionError("system_message", "third-person reference '" + target + suffix + "'");
  }
}

FirstPersonItem convert_item(const ThirdPersonItem& item, ConversionReport* report) {
  if (item.target.empty()) throw ConversionError("target", "empty target name");
  if (std::find(item.characters.begin(), item.characters.end(), item.target) == item.characters.end())
    throw ConversionError("target", "'" + item.target + "' is not one of the item's characters");
  if (item.answer_index < 0 || item.answer_index >= static_cast<int>(item.options.size()))
    throw ConversionError("answer_index", "out of range for " + std::to_string(item.options.size()) + " options");

  FirstPersonItem out;
  out.system_message = build_system_message(item.target, item.background);
  out.story = convert_story(item.story, item.target, report);
  out.question = convert_question(item.question, item.target, report);
  for (std::size_t i = 0; i < item.options.size(); ++i)
    out.options.push_back(convert_text(item.options[i], item.target, "option " + std::to_string(i), report));
  out.answer_index = item.answer_index;
  validate_first_person(out, item.target);
  return out;
}

}  // namespace egoarena
