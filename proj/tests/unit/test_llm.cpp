#include <gtest/gtest.h>

#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "egoarena/core/error.hpp"
#include "egoarena/engines/blackjack.hpp"
#include "egoarena/harness/io.hpp"
#include "egoarena/llm/agent_config.hpp"
#include "egoarena/llm/parsers.hpp"
#include "egoarena/llm/prompts.hpp"
#include "egoarena/llm/providers.hpp"
#include "egoarena/llm/stub_policy.hpp"

using namespace egoarena;
using namespace egoarena::llm;

namespace {
const std::string kSource = EGOARENA_SOURCE_DIR;

HoldemActionSet set_of(std::initializer_list<HoldemAction> actions) {
  HoldemActionSet s;
  for (auto a : actions) s.insert(a);
  return s;
}
const HoldemActionSet kAll = set_of({HoldemAction::Fold, HoldemAction::Check, HoldemAction::Call, HoldemAction::Raise});
}  // namespace

// --- parsers ---

TEST(ParseGuess, AnswerLabelWins) {
  EXPECT_EQ(*parse_number_guess("I think 50 is likely.\nAnswer: 33").value, 33);
  EXPECT_EQ(*parse_number_guess("answer:  7").value, 7);
}

TEST(ParseGuess, FallsBackToLastInteger) {
  EXPECT_EQ(*parse_number_guess("Between 20 and 30, I pick 24").value, 24);
  EXPECT_EQ(*parse_number_guess("I'd go with 40, about 80% of the mean").value, 40);
  EXPECT_EQ(*parse_number_guess("roughly 36.8 so 37").value, 37);
}

TEST(ParseGuess, RejectsOutOfRangeAndEmpty) {
  EXPECT_FALSE(parse_number_guess("Answer: 150").ok());
  EXPECT_FALSE(parse_number_guess("no idea").ok());
  EXPECT_FALSE(parse_number_guess("").ok());
  EXPECT_FALSE(parse_number_guess("0").ok());
}

TEST(ParseBelief, LabelThenFirstNumber) {
  EXPECT_DOUBLE_EQ(*parse_belief("Belief: 45\nAnswer: 36").value, 45.0);
  EXPECT_DOUBLE_EQ(*parse_belief("They will probably pick 7.54, then I answer 6").value, 7.5);
  EXPECT_DOUBLE_EQ(*parse_belief("at 80% they pick 40").value, 40.0);
  EXPECT_FALSE(parse_belief("no numbers").ok());
}

TEST(ParseHoldem, LabelKeywordAndLegality) {
  EXPECT_EQ(*parse_holdem_action("Action: raise", kAll).value, HoldemAction::Raise);
  EXPECT_EQ(*parse_holdem_action("I could fold but I'll call.", kAll).value, HoldemAction::Call);
  EXPECT_EQ(*parse_holdem_action("I'll re-raise here", kAll).value, HoldemAction::Raise);
  EXPECT_EQ(*parse_holdem_action("I give up", kAll).value, HoldemAction::Fold);
  EXPECT_EQ(*parse_holdem_action("Let me pass.", kAll).value, HoldemAction::Check);
  const auto fc = set_of({HoldemAction::Fold, HoldemAction::Call});
  const auto illegal = parse_holdem_action("Action: check", fc);
  EXPECT_FALSE(illegal.ok());
  EXPECT_NE(illegal.error.find("check"), std::string::npos);
  EXPECT_FALSE(parse_holdem_action("hmm", kAll).ok());
}

TEST(ParseHoldem, PredictionNeedsItsLine) {
  EXPECT_EQ(*parse_holdem_prediction("Prediction: raise\nAction: call").value, HoldemAction::Raise);
  EXPECT_FALSE(parse_holdem_prediction("Action: call").ok());
}

TEST(ParseHoldem, SafeDefaults) {
  EXPECT_EQ(holdem_safe_default(kAll), HoldemAction::Check);
  EXPECT_EQ(holdem_safe_default(set_of({HoldemAction::Fold, HoldemAction::Call})), HoldemAction::Fold);
  EXPECT_EQ(kBlackjackSafeDefault, BlackjackAction::Stand);
}

TEST(ParseBlackjack, Synonyms) {
  EXPECT_EQ(*parse_blackjack_action("Action: hit").value, BlackjackAction::Hit);
  EXPECT_EQ(*parse_blackjack_action("I'll take another card").value, BlackjackAction::Hit);
  EXPECT_EQ(*parse_blackjack_action("I will stay").value, BlackjackAction::Stand);
  EXPECT_EQ(*parse_blackjack_action("Stick.").value, BlackjackAction::Stand);
  EXPECT_FALSE(parse_blackjack_action("double down").ok());
}

TEST(ParseMcq, LetterForms) {
  const std::vector<std::string> opts = {"the red box", "the green box", "under the bed"};
  EXPECT_EQ(*parse_mcq_choice("Answer: B", opts).value, 1);
  EXPECT_EQ(*parse_mcq_choice("The answer is C.", opts).value, 2);
  EXPECT_EQ(*parse_mcq_choice("(A) because", opts).value, 0);
  EXPECT_EQ(*parse_mcq_choice("B) the green box", opts).value, 1);
  EXPECT_EQ(*parse_mcq_choice("b", opts).value, 1);
  EXPECT_EQ(*parse_mcq_choice("I would pick option c", opts).value, 2);
}

TEST(ParseMcq, OptionTextAndFailures) {
  const std::vector<std::string> opts = {"the red box", "the green box", "under the bed"};
  EXPECT_EQ(*parse_mcq_choice("You will look in the green box.", opts).value, 1);
  EXPECT_FALSE(parse_mcq_choice("either the red box or the green box", opts).ok());
  EXPECT_FALSE(parse_mcq_choice("Answer: E", opts).ok());
  EXPECT_FALSE(parse_mcq_choice("no idea", opts).ok());
}

TEST(ParseJudge, ScoreRange) {
  EXPECT_EQ(*parse_judge_score("Reasoning...\nScore: 7").value, 7);
  EXPECT_FALSE(parse_judge_score("Score: 11").ok());
  EXPECT_FALSE(parse_judge_score("7/10").ok());
}

TEST(LabelledLine, LastOccurrenceAndWordBoundary) {
  EXPECT_EQ(*labelled_line("Action: fold\nAction: call", "action"), "call");
  EXPECT_FALSE(labelled_line("Reaction: fold", "action").has_value());
}

// --- prompts and the stub contract ---

TEST(Prompts, TaskLineAndFormats) {
  const auto g = guess_prompt(GuessState{});
  ASSERT_FALSE(g.empty());
  EXPECT_EQ(g.back().content.rfind("Task: ", 0), 0u);
  EXPECT_NE(g.back().content.find("Belief:"), std::string::npos);
  const auto bj = blackjack_prompt(blackjack_deal(1), 1, 10);
  const std::string text = bj.back().content;
  EXPECT_NE(text.find("Action:"), std::string::npos);
  EXPECT_EQ(option_letter(0), "A");
  EXPECT_EQ(option_letter(3), "D");
}

TEST(Prompts, HoldemPromptHidesOpponentCards) {
  const auto s = holdem_deal(12, 0);
  const auto text = holdem_prompt(s, 0, 1, 50).back().content;
  EXPECT_NE(text.find(to_display(s.hands[0][0])), std::string::npos);
  EXPECT_EQ(text.find(to_display(s.hands[1][0])), std::string::npos);
  EXPECT_EQ(text.find(to_display(s.hands[1][1])), std::string::npos);
  EXPECT_NE(text.find("Legal actions"), std::string::npos);
}

TEST(Prompts, BlackjackPromptHidesHoleCard) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = blackjack_deal(seed);
    if (s.dealer_hole == s.player_hand[0] || s.dealer_hole == s.player_hand[1]) continue;
    const auto text = blackjack_prompt(s, 1, 1).back().content;
    EXPECT_EQ(text.find(to_display(s.dealer_hole)), std::string::npos) << seed;
  }
}

TEST(StubContract, EveryPromptGetsAParseableReply) {
  GuessState gs;
  gs = guess_step(gs, 30, 50);
  const auto guess = heuristic_reply(guess_prompt(gs), 7);
  EXPECT_TRUE(parse_number_guess(guess).ok());
  EXPECT_DOUBLE_EQ(*parse_belief(guess).value, 50.0);
  EXPECT_EQ(*parse_number_guess(guess).value, 40);

  const auto hs = holdem_deal(3, 0);
  const auto h = heuristic_reply(holdem_prompt(hs, 0, 1, 1), 7);
  EXPECT_TRUE(parse_holdem_action(h, holdem_legal_actions(hs)).ok());
  EXPECT_TRUE(parse_holdem_prediction(h).ok());

  const auto bs = blackjack_deal(3);
  const auto b = heuristic_reply(blackjack_prompt(bs, 1, 1), 7);
  const auto want = blackjack_hand_value(bs.player_hand).value < 17 ? BlackjackAction::Hit : BlackjackAction::Stand;
  EXPECT_EQ(*parse_blackjack_action(b).value, want);

  const auto items = load_items(kSource + "/data/items/real_world.jsonl");
  for (const auto& item : items) EXPECT_TRUE(parse_mcq_choice(heuristic_reply(mcq_prompt(item), 7), item.options).ok());

  const auto map = load_bomb_map(kSource + "/data/fixtures/one_bomb.json");
  const auto bomb = heuristic_reply(bomb_prompt(map, 0, {}), 7);
  EXPECT_EQ(parse_bomb_action(*labelled_line(bomb, "action"), map).action.color, "red");

  const auto scenarios = load_dialogue_scenarios(kSource + "/data/dialogue/scenarios.jsonl");
  Transcript t;
  t.turns.push_back({1, 0, scenarios[0].characters[0].name, "Hello"});
  EXPECT_TRUE(parse_judge_score(heuristic_reply(judge_prompt(scenarios[0], 0, t), 7)).ok());
}

TEST(StubContract, DeterministicPerSeed) {
  const auto items = load_items(kSource + "/data/items/counterfactual.jsonl");
  std::string a, b;
  for (const auto& item : items) {
    a += heuristic_reply(mcq_prompt(item), 1);
    b += heuristic_reply(mcq_prompt(item), 1);
  }
  EXPECT_EQ(a, b);
}

// --- client retry ---

TEST(ChatClient, RetriesTransientThenSucceeds) {
  AgentSpec spec;
  spec.retry = {3, 100};
  auto provider = std::make_shared<ScriptedProvider>(std::vector<ScriptedProvider::Step>{{"", 429}, {"", 503}, {"ok"}});
  std::vector<int> sleeps;
  ChatClient c(spec, provider, [&](int ms) { sleeps.push_back(ms); });
  EXPECT_EQ(c.complete({user_message("hi")}), "ok");
  EXPECT_EQ(sleeps, (std::vector<int>{100, 200}));
  const auto ex = c.drain_exchanges();
  ASSERT_EQ(ex.size(), 3u);
  EXPECT_EQ(ex[0].status, 429);
  EXPECT_TRUE(ex[0].transient);
  EXPECT_TRUE(ex[2].ok);
  EXPECT_EQ(ex[2].attempt, 3);
  EXPECT_TRUE(c.drain_exchanges().empty());
}

TEST(ChatClient, PermanentFailureIsNotRetried) {
  AgentSpec spec;
  auto provider = std::make_shared<ScriptedProvider>(std::vector<ScriptedProvider::Step>{{"", 401, true}, {"never"}});
  ChatClient c(spec, provider, [](int) {});
  try {
    c.complete({user_message("hi")});
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.last_status(), 401);
  }
  EXPECT_EQ(c.drain_exchanges().size(), 1u);
}

TEST(ChatClient, ExhaustedRetriesRaise) {
  AgentSpec spec;
  spec.retry = {2, 0};
  auto provider = std::make_shared<ScriptedProvider>(std::vector<ScriptedProvider::Step>{{"", 500}, {"", 502}, {"late"}});
  ChatClient c(spec, provider, [](int) {});
  EXPECT_THROW(c.complete({user_message("hi")}), ProviderError);
  EXPECT_EQ(c.drain_exchanges().size(), 2u);
}

TEST(ScriptedProvider, CyclesAndEmpties) {
  AgentSpec spec;
  ScriptedProvider cyc(std::vector<std::string>{"a", "b"}, true);
  EXPECT_EQ(cyc.send(spec, {}).text, "a");
  EXPECT_EQ(cyc.send(spec, {}).text, "b");
  EXPECT_EQ(cyc.send(spec, {}).text, "a");
  ScriptedProvider once(std::vector<std::string>{"x"});
  once.send(spec, {});
  const auto r = once.send(spec, {});
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.transient);
}

// --- agent config ---

TEST(AgentConfig, YamlKeys) {
  const auto spec = agent_spec_from_yaml(R"(
name: gpt4o
provider: openai
model: gpt-4o
temperature: 0.7
max_tokens: 256
seed: 3
retry: {max_attempts: 5, backoff_ms: 10}
http: {base_url: "http://localhost:9/v1", api_key_env: MY_KEY}
)");
  EXPECT_EQ(spec.name, "gpt4o");
  EXPECT_EQ(spec.provider, "openai");
  EXPECT_DOUBLE_EQ(spec.temperature, 0.7);
  EXPECT_EQ(spec.retry.max_attempts, 5);
  EXPECT_EQ(spec.base_url, "http://localhost:9/v1");
  EXPECT_EQ(*spec.seed, 3);
}

TEST(AgentConfig, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(agent_spec_from_yaml("name: x\nprovidr: stub\n"), ConfigError);
  EXPECT_THROW(agent_spec_from_yaml("name: x\nprovider: carrier-pigeon\n"), ConfigError);
  EXPECT_THROW(agent_spec_from_yaml("name: x\ntemperature: hot\n"), ConfigError);
  EXPECT_THROW(make_provider(agent_spec_from_yaml("name: x\nstub: {policy: psychic}\n")), ConfigError);
}

TEST(AgentConfig, ShippedSpecsLoad) {
  EXPECT_EQ(load_agent_spec(kSource + "/data/agents/stub.yaml").stub_policy, "heuristic");
  EXPECT_EQ(load_agent_spec(kSource + "/data/agents/gpt4o.yaml").provider, "openai");
  EXPECT_EQ(agent_spec_from_yaml(R"({"name": "j", "stub": {"responses": ["1"]}})").stub_responses.size(), 1u);
}

// --- HTTP provider ---

TEST(HttpProvider, RequestBodyAndResponseParsing) {
  AgentSpec spec;
  spec.model = "m";
  spec.temperature = 0.2;
  spec.seed = 4;
  const auto body = HttpChatProvider::request_body(spec, {system_message("s"), user_message("u")});
  EXPECT_EQ(body["model"], "m");
  EXPECT_EQ(body["messages"][0]["role"], "system");
  EXPECT_EQ(body["messages"][1]["content"], "u");
  EXPECT_EQ(body["seed"], 4);

  const auto ok = HttpChatProvider::parse_response(200, R"({"choices":[{"message":{"content":"hello"}}]})");
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.text, "hello");
  EXPECT_TRUE(HttpChatProvider::parse_response(429, "{}").transient);
  EXPECT_TRUE(HttpChatProvider::parse_response(503, "{}").transient);
  EXPECT_FALSE(HttpChatProvider::parse_response(400, "{}").transient);
  EXPECT_FALSE(HttpChatProvider::parse_response(200, "not json").ok);
}

TEST(HttpProvider, TalksToCompatibleServerAndRetries) {
  httplib::Server server;
  int calls = 0;
  std::string auth;
  server.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
    auth = req.get_header_value("Authorization");
    if (++calls == 1) {
      res.status = 503;
      return;
    }
    const auto body = nlohmann::json::parse(req.body);
    const std::string reply = "echo " + body["messages"].back()["content"].get<std::string>();
    res.set_content(nlohmann::json{{"choices", {{{"message", {{"role", "assistant"}, {"content", reply}}}}}}}.dump(),
                    "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  setenv("EGOARENA_TEST_KEY", "sekret", 1);
  AgentSpec spec;
  spec.provider = "openai";
  spec.base_url = "http://127.0.0.1:" + std::to_string(port) + "/v1/";
  spec.api_key_env = "EGOARENA_TEST_KEY";
  ChatClient c(spec, make_provider(spec), [](int) {});
  EXPECT_EQ(c.complete({user_message("ping")}), "echo ping");
  EXPECT_EQ(calls, 2);
  EXPECT_EQ(auth, "Bearer sekret");

  spec.api_key_env = "EGOARENA_TEST_KEY_MISSING";
  ChatClient missing(spec, make_provider(spec), [](int) {});
  EXPECT_THROW(missing.complete({user_message("ping")}), ProviderError);
  EXPECT_EQ(missing.drain_exchanges().size(), 1u);

  server.stop();
  th.join();
}
