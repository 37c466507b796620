#include <gtest/gtest.h>

#include <fstream>

#include <json.hpp>

#include "egoarena/core/error.hpp"
#include "egoarena/perspective.hpp"

using namespace egoarena;
using nlohmann::json;

namespace {
struct Golden {
  std::string id;
  ThirdPersonItem item;
  json expected;
};

std::vector<Golden> load_golden() {
  std::ifstream in(std::string(EGOARENA_SOURCE_DIR) + "/tests/data/perspective_golden.jsonl");
  std::vector<Golden> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    ThirdPersonItem t;
    t.story = j.at("story");
    t.question = j.at("question");
    t.options = j.at("options").get<std::vector<std::string>>();
    t.answer_index = j.at("answer_index");
    t.characters = j.at("characters").get<std::vector<std::string>>();
    t.target = j.at("target");
    t.background = j.value("background", "");
    out.push_back({j.at("id"), t, j.at("expected")});
  }
  return out;
}
}  // namespace

TEST(Perspective, GoldenCorpusMatchesHandWrittenRewrites) {
  const auto corpus = load_golden();
  ASSERT_GE(corpus.size(), 20u);
  for (const auto& g : corpus) {
    SCOPED_TRACE(g.id);
    const auto f = convert_item(g.item);
    EXPECT_EQ(f.story, g.expected.at("story").get<std::string>());
    EXPECT_EQ(f.question, g.expected.at("question").get<std::string>());
    EXPECT_EQ(f.options, g.expected.at("options").get<std::vector<std::string>>());
    EXPECT_EQ(f.answer_index, g.item.answer_index);
    EXPECT_EQ(count_name(f.story, g.item.target), 0);
    EXPECT_TRUE(agreement_violations(f.story).empty());
    EXPECT_TRUE(agreement_violations(f.question).empty());
  }
}

TEST(Perspective, SystemMessage) {
  EXPECT_EQ(build_system_message("Sally", "You live in a small town."),
            "You are Sally. You live in a small town. You have personally experienced the following events.");
  EXPECT_EQ(build_system_message("Sally", ""), "You are Sally. You have personally experienced the following events.");
}

TEST(Perspective, VerbAgreementAndPossessives) {
  EXPECT_EQ(convert_story("Sally is happy. Sally has a cat. Sally's cat sleeps.", "Sally"),
            "You are happy. You have a cat. Your cat sleeps.");
  EXPECT_EQ(convert_question("Where does Sally think the ball is?", "Sally"), "Where do you think the ball is?");
  EXPECT_EQ(convert_text("Anne gives Sally the ball.", "Sally", "story"), "Anne gives you the ball.");
}

TEST(Perspective, OtherCharactersUntouched) {
  EXPECT_EQ(convert_story("Sally and Anne play. Anne is tired.", "Sally"), "You and Anne play. Anne is tired.");
}

TEST(Perspective, MissingTargetIsAnError) {
  EXPECT_THROW(convert_story("Anne plays.", "Sally"), ConversionError);
  ThirdPersonItem t;
  t.story = "Anne plays.";
  t.question = "What does Anne play?";
  t.options = {"chess", "cards"};
  t.target = "Sally";
  t.characters = {"Anne", "Sally"};
  EXPECT_THROW(convert_item(t), ConversionError);
}

TEST(Perspective, ReportFlagsAmbiguousPronouns) {
  ConversionReport rep;
  convert_story("Sally meets Anne. Anne gives Sally her book.", "Sally", &rep);
  ASSERT_FALSE(rep.entries.empty());
  EXPECT_EQ(rep.entries[0].field, "story");
}

TEST(Perspective, ValidationCatchesResidueAndAgreement) {
  FirstPersonItem f;
  f.system_message = build_system_message("Sally", "");
  f.story = "You go out. Sally returns.";
  f.question = "Where are you?";
  f.options = {"home", "away"};
  EXPECT_THROW(validate_first_person(f, "Sally"), ConversionError);
  f.story = "You is out.";
  EXPECT_THROW(validate_first_person(f, "Sally"), ConversionError);
  EXPECT_FALSE(agreement_violations("Does you know?").empty());
  f.story = "You are out.";
  EXPECT_NO_THROW(validate_first_person(f, "Sally"));
}

TEST(Perspective, CountNameIsWholeWordCaseInsensitive) {
  EXPECT_EQ(count_name("Sally and sally, not Sallyanne.", "Sally"), 2);
}
