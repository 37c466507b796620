#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "egoarena/core/error.hpp"
#include "egoarena/core/rng.hpp"
#include "egoarena/dqn/network.hpp"
#include "egoarena/engines/guess.hpp"
#include "egoarena/engines/holdem.hpp"

namespace egoarena {

// --- G0.8A rule-based opponents ------------------------------------------

// Level 1: a constant, 50 unless configured otherwise.
int level1_action(int round, int constant = 50);

// Level 2: arithmetic sequence 50, 45, ..., 5.
int level2_action(int round);

// Level 3: copies the previous round's gold, 0.8 x mean of both previous
// guesses, rounded to one decimal and clamped to the [1, 100] action range.
double level3_action(double prev_agent, double prev_opponent);

// Level 3 has no previous gold in round 1 and opens with this value.
inline constexpr double kLevel3Opening = 50.0;

// Uniform front end over the three levels; `history` holds completed rounds.
class GuessOpponent {
 public:
  explicit GuessOpponent(int level, int constant = 50);
  double act(int round, const std::vector<GuessRound>& history) const;
  int level() const { return level_; }

 private:
  int level_;
  int constant_;
};

// --- Hold'em policies ------------------------------------------------------

class HoldemPolicy {
 public:
  virtual ~HoldemPolicy() = default;
  virtual HoldemAction act(const HoldemState& state, int seat) = 0;
  virtual std::string name() const = 0;
};

// Masked greedy argmax over a frozen Q-network (ties: Fold < Check < Call < Raise).
HoldemAction dqn_policy_action(const dqn::QNetwork& net, const HoldemState& state, int player);

class DqnPolicy : public HoldemPolicy {
 public:
  DqnPolicy(std::shared_ptr<const dqn::QNetwork> net, std::string label);
  HoldemAction act(const HoldemState& state, int seat) override;
  std::string name() const override { return label_; }

 private:
  std::shared_ptr<const dqn::QNetwork> net_;
  std::string label_;
};

// Uniform over legal actions from its own seeded stream.
class RandomLegalPolicy : public HoldemPolicy {
 public:
  explicit RandomLegalPolicy(std::uint64_t seed) : rng_(seed) {}
  HoldemAction act(const HoldemState& state, int seat) override;
  std::string name() const override { return "random"; }

 private:
  Rng rng_;
};

// Calls any bet, checks otherwise, never folds or raises.
class CallingStationPolicy : public HoldemPolicy {
 public:
  HoldemAction act(const HoldemState& state, int seat) override;
  std::string name() const override { return "calling-station"; }
};

// --- Scripted replay -------------------------------------------------------

// Returns script[t - 1]; t is 1-based. Throws InvalidArgument once exhausted.
template <typename T>
const T& scripted_action(const std::vector<T>& script, int t) {
  if (t < 1 || static_cast<std::size_t>(t) > script.size())
    throw InvalidArgument("script exhausted at step " + std::to_string(t) + " of " + std::to_string(script.size()));
  return script[static_cast<std::size_t>(t) - 1];
}

class ScriptedHoldemPolicy : public HoldemPolicy {
 public:
  explicit ScriptedHoldemPolicy(std::vector<HoldemAction> script) : script_(std::move(script)) {}
  HoldemAction act(const HoldemState& state, int seat) override;
  std::string name() const override { return "scripted"; }

 private:
  std::vector<HoldemAction> script_;
  int next_ = 1;
};

}  // namespace egoarena
