#pragma once

#include <string>
#include <vector>

#include "egoarena/core/error.hpp"

namespace egoarena {

// Rule-based third-person to first-person rewriting of templated, ToMI-style
// items. The target character becomes "you": bare mentions turn into
// "you"/"You", possessives into "your", and reflexives in clauses the target
// governs into "yourself". Verbs whose subject became "you" are put into
// second-person agreement (is->are, was->were, has->have, does->do,
// likes->like), including inverted auxiliaries in questions ("Where does Sally
// ..." -> "Where do you ..."). The grammar relies on clause position and is
// only reliable on grammatically regular template text.

struct ThirdPersonItem {
  std::string story;
  std::string question;
  std::vector<std::string> options;
  int answer_index = 0;
  std::vector<std::string> characters;
  std::string target;
  std::string background;  // optional sentence(s) for the system message
};

struct FirstPersonItem {
  std::string system_message;
  std::string story;
  std::string question;
  std::vector<std::string> options;
  int answer_index = 0;
};

// Raised when conversion preconditions fail or residue is found; `where`
// names the field (story, question, option 2, ...).
class ConversionError : public Error {
 public:
  ConversionError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Sentences the grammar rewrote with low confidence, for manual review.
struct ConversionReport {
  struct Entry {
    std::string field;
    std::string sentence;
    std::string reason;
  };
  std::vector<Entry> entries;
};

// "You are {target}. {background} You have personally experienced the
// following events." The background sentence is omitted when empty.
std::string build_system_message(const std::string& target, const std::string& background);

// Throws ConversionError if the target does not occur in the text.
std::string convert_story(const std::string& story, const std::string& target, ConversionReport* report = nullptr);
std::string convert_question(const std::string& question, const std::string& target,
                             ConversionReport* report = nullptr);

// Applies the rewriting to any text; the target need not occur.
std::string convert_text(const std::string& text, const std::string& target, const std::string& field,
                         ConversionReport* report = nullptr);

// Converts every field, then runs validate_first_person. Throws
// ConversionError on a failed precondition or on residue.
FirstPersonItem convert_item(const ThirdPersonItem& item, ConversionReport* report = nullptr);

// Case-insensitive whole-word occurrences of `name` in `text`.
int count_name(const std::string& text, const std::string& name);

// Second-person agreement errors such as "you is", "you was", "you has",
// "you does", "does you" and "is you".
std::vector<std::string> agreement_violations(const std::string& text);

// Throws ConversionError naming the first field that still mentions the
// target, breaks agreement, or (system message) refers to the target in the
// third person.
void validate_first_person(const FirstPersonItem& item, const std::string& target);

}  // namespace egoarena
