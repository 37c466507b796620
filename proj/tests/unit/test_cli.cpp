#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = EGOARENA_CLI;
const std::string kSource = EGOARENA_SOURCE_DIR;
const std::string kStub = kSource + "/data/agents/stub.yaml";

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI in `cwd` with stderr folded into stdout.
Run cli(const std::string& args, const fs::path& cwd, const std::string& env = "") {
  fs::create_directories(cwd);
  const std::string cmd = "cd '" + cwd.string() + "' && " + env + " '" + kCli + "' " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh(const std::string& name) {
  const auto dir = fs::path(testing::TempDir()) / ("cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> jsonl_files(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.path().extension() == ".jsonl") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Cli, HelpAndBadFlags) {
  const auto dir = fresh("help");
  const auto help = cli("--help", dir);
  EXPECT_EQ(help.code, 0);
  for (const char* sub : {"eval-static", "eval-guess", "eval-holdem", "eval-blackjack", "eval-bomb", "eval-dialogue",
                          "train-dqn", "report", "convert", "serve"})
    EXPECT_NE(help.out.find(sub), std::string::npos) << sub;
  EXPECT_NE(cli("eval-guess --agent '" + kStub + "' --level 2 --bogus", dir).code, 0);
  EXPECT_NE(cli("eval-guess --level 2", dir).code, 0);
  EXPECT_NE(cli("eval-guess --agent '" + kStub + "' --level 7", dir).code, 0);
  EXPECT_NE(cli("eval-guess --agent missing.yaml --level 1", dir).code, 0);
  EXPECT_NE(cli("no-such-command", dir).code, 0);
}

TEST(Cli, BadAgentSpecIsAnError) {
  const auto dir = fresh("badspec");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.yaml") << "name: x\nprovider: carrier-pigeon\n";
  const auto r = cli("eval-guess --agent bad.yaml --level 1", dir);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("error:"), std::string::npos);
}

TEST(Cli, EvalGuessWritesLogAndPrintsBeliefs) {
  const auto dir = fresh("guess");
  const auto r = cli("eval-guess --agent '" + kStub + "' --level 2 --rounds 4 --seed 3", dir);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("opponent: 50.0, 45.0, 40.0, 35.0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("belief accuracy"), std::string::npos);
  const auto logs = jsonl_files(dir / "runs");
  ASSERT_EQ(logs.size(), 1u);
  std::ifstream in(logs[0]);
  std::string header;
  std::getline(in, header);
  const auto h = json::parse(header);
  EXPECT_EQ(h["scenario"], "guess");
  EXPECT_EQ(h["config"]["level"], 2);

  // same seed and stub, same bytes
  const auto again = fresh("guess_again");
  ASSERT_EQ(cli("eval-guess --agent '" + kStub + "' --level 2 --rounds 4 --seed 3", again).code, 0);
  const auto logs2 = jsonl_files(again / "runs");
  ASSERT_EQ(logs2.size(), 1u);
  EXPECT_EQ(slurp(logs[0]), slurp(logs2[0]));
}

TEST(Cli, EvalBlackjackAndReport) {
  const auto dir = fresh("bj");
  ASSERT_EQ(cli("eval-blackjack --agent '" + kStub + "' --hands 40", dir).code, 0);
  ASSERT_EQ(cli("eval-guess --agent '" + kStub + "' --level 1 --rounds 3", dir).code, 0);
  const auto r = cli("report --in runs --out rep", dir);
  ASSERT_EQ(r.code, 0) << r.out;
  const auto report = json::parse(slurp(dir / "rep" / "report.json"));
  EXPECT_EQ(report["model"], "stub");
  EXPECT_FALSE(report["scores"]["adversarial"].is_null());
  EXPECT_FALSE(report["scores"]["g08a_level1"].is_null());
  EXPECT_TRUE(report["avg"].is_null());
  const std::string csv = slurp(dir / "rep" / "report.csv");
  EXPECT_EQ(csv.rfind("model,first_person_static,", 0), 0u);
  EXPECT_EQ(slurp(dir / "rep" / "belief_curves.csv").rfind("model,level,round,belief,actual,gold\n", 0), 0u);
  EXPECT_NE(cli("report --in does-not-exist", dir).code, 0);
}

TEST(Cli, TrainDqnIsReproducible) {
  const auto dir = fresh("train");
  ASSERT_EQ(cli("train-dqn --personality aggressive --seed 5 --episodes 300 --out a.eqn", dir).code, 0);
  ASSERT_EQ(cli("train-dqn --personality aggressive --seed 5 --episodes 300 --out b.eqn", dir).code, 0);
  ASSERT_EQ(cli("train-dqn --personality aggressive --seed 6 --episodes 300 --out c.eqn", dir).code, 0);
  EXPECT_FALSE(slurp(dir / "a.eqn").empty());
  EXPECT_EQ(slurp(dir / "a.eqn"), slurp(dir / "b.eqn"));
  EXPECT_NE(slurp(dir / "a.eqn"), slurp(dir / "c.eqn"));
  EXPECT_NE(cli("train-dqn --personality reckless --episodes 10", dir).code, 0);

  // a saved checkpoint drives eval-holdem
  const auto r = cli("eval-holdem --agent '" + kStub + "' --opponent a.eqn --hands 6", dir);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(cli("eval-holdem --agent '" + kStub + "' --opponent b.eqn.missing --hands 6", dir).code, 0);
}

TEST(Cli, ConvertWritesItemsAndReview) {
  const auto dir = fresh("convert");
  const auto r = cli("convert --in '" + kSource + "/data/source/static_cognition_third_person.jsonl' --out items.jsonl --report review.jsonl", dir);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(slurp(dir / "items.jsonl"), slurp(kSource + "/data/items/static_cognition.jsonl"));
  EXPECT_TRUE(fs::exists(dir / "review.jsonl"));
}

TEST(Cli, EvalStaticOnShippedItems) {
  const auto dir = fresh("static");
  const auto r = cli("eval-static --agent '" + kStub + "' --items '" + kSource + "/data/items'", dir);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(jsonl_files(dir / "runs").size(), 1u);
}

TEST(Cli, ServeRequiresToken) {
  const auto dir = fresh("serve");
  const auto r = cli("serve --port 0", dir, "env -u EGOARENA_TOKEN");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("EGOARENA_TOKEN"), std::string::npos) << r.out;
}
