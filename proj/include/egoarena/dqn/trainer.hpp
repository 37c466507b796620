#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "egoarena/dqn/network.hpp"
#include "egoarena/engines/holdem.hpp"

namespace egoarena::dqn {

enum class Personality { Neutral, Aggressive, Conservative };

std::string to_string(Personality p);
Personality personality_from_string(const std::string& name);

struct TrainConfig {
  double gamma = 0.99;
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  long epsilon_decay_steps = 8000;
  std::size_t replay_capacity = 20000;
  std::size_t batch_size = 32;
  std::size_t min_replay = 256;  // learning starts once the buffer holds this many
  long target_sync_period = 500;  // gradient steps between target-network copies
  double learning_rate = 5e-4;
  Personality personality = Personality::Neutral;
  double shaping_bonus = 0.25;  // beta, in units of the starting stack
  long episodes = 3000;
  // Share of episodes played against a uniformly random legal opponent before
  // switching to self-play against a frozen copy of the learner.
  double random_opponent_fraction = 0.5;
  long snapshot_period = 500;  // episodes between refreshes of the frozen copy
  std::vector<int> hidden = {128, 128};
  std::uint64_t seed = 0;
  HoldemConfig holdem;

  // Throws ConfigError when a declared range is violated.
  void validate() const;
};

// reward if terminal, otherwise reward + gamma * max_next_q.
double bellman_target(double reward, double gamma, double max_next_q, bool terminal);

// Adds the personality bonus: aggressive rewards Raise and Call, conservative
// rewards Fold, neutral adds nothing.
double shaped_reward(double base, HoldemAction action, Personality personality, double beta);

struct TrainStats {
  long gradient_steps = 0;
  long learner_decisions = 0;
  double final_loss = 0;
  std::array<long, 4> action_counts{};
};

struct TrainResult {
  QNetwork network;
  TrainStats stats;
};

// Epsilon-greedy DQN on the Hold'em engine with uniform replay and a periodically
// synced target network. The learner always sits in seat 0; the button
// alternates between episodes. Throws Error if the loss becomes non-finite.
TrainResult train_dqn(const TrainConfig& config);

struct ActionShare {
  std::array<long, 4> counts{};
  long total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  // Fraction of decisions that were Raise or Call.
  double aggressive_share() const;
};

// Greedy play of `net` in seat 0 against a uniformly random legal opponent
// for `hands` seeded hands.
ActionShare evaluate_action_share(const QNetwork& net, long hands, std::uint64_t seed, HoldemConfig config = {});

}  // namespace egoarena::dqn
