#include "egoarena/dqn/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "egoarena/core/error.hpp"
#include "egoarena/core/rng.hpp"
#include "egoarena/dqn/features.hpp"
#include "egoarena/dqn/replay.hpp"

namespace egoarena::dqn {

std::string to_string(Personality p) {
  switch (p) {
    case Personality::Neutral: return "neutral";
    case Personality::Aggressive: return "aggressive";
    case Personality::Conservative: return "conservative";
  }
  return "?";
}

Personality personality_from_string(const std::string& name) {
  if (name == "neutral") return Personality::Neutral;
  if (name == "aggressive") return Personality::Aggressive;
  if (name == "conservative") return Personality::Conservative;
  throw ConfigError("unknown personality '" + name + "'");
}

void TrainConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("train config: ") + what);
  };
  require(gamma >= 0.0 && gamma <= 1.0, "gamma must be in [0, 1]");
  require(epsilon_start >= 0.0 && epsilon_start <= 1.0, "epsilon_start must be in [0, 1]");
  require(epsilon_end >= 0.0 && epsilon_end <= 1.0, "epsilon_end must be in [0, 1]");
  require(epsilon_decay_steps >= 0, "epsilon_decay_steps must be >= 0");
  require(replay_capacity > 0, "replay_capacity must be positive");
  require(batch_size > 0, "batch_size must be positive");
  require(min_replay >= 1, "min_replay must be >= 1");
  require(target_sync_period > 0, "target_sync_period must be positive");
  require(learning_rate > 0.0, "learning_rate must be positive");
  require(shaping_bonus >= 0.0, "shaping_bonus must be >= 0");
  require(episodes >= 0, "episodes must be >= 0");
  require(random_opponent_fraction >= 0.0 && random_opponent_fraction <= 1.0,
          "random_opponent_fraction must be in [0, 1]");
  require(snapshot_period > 0, "snapshot_period must be positive");
  for (int h : hidden) require(h > 0, "hidden sizes must be positive");
}

double bellman_target(double reward, double gamma, double max_next_q, bool terminal) {
  if (gamma < 0.0 || gamma > 1.0) throw InvalidArgument("gamma must be in [0, 1]");
  return terminal ? reward : reward + gamma * max_next_q;
}

double shaped_reward(double base, HoldemAction action, Personality personality, double beta) {
  if (beta < 0.0) throw InvalidArgument("shaping bonus must be >= 0");
  switch (personality) {
    case Personality::Aggressive:
      return base + ((action == HoldemAction::Raise || action == HoldemAction::Call) ? beta : 0.0);
    case Personality::Conservative:
      return base + (action == HoldemAction::Fold ? beta : 0.0);
    case Personality::Neutral:
      return base;
  }
  return base;
}

double ActionShare::aggressive_share() const {
  const long n = total();
  return n == 0 ? 0.0 : static_cast<double>(counts[2] + counts[3]) / static_cast<double>(n);
}

namespace {

HoldemAction random_legal(const HoldemActionSet& legal, Rng& rng) {
  const auto options = legal.to_vector();
  return options[rng.below(options.size())];
}

HoldemAction greedy(const QNetwork& net, const HoldemState& s, int seat) {
  const auto q = net.forward(encode_holdem_state(s, seat));
  return masked_argmax(q, holdem_legal_actions(s));
}

double max_legal_q(const QNetwork& net, const std::vector<double>& features, const HoldemActionSet& legal) {
  const auto q = net.forward(features);
  double best = -INFINITY;
  for (auto a : legal.to_vector()) best = std::max(best, q[static_cast<int>(a)]);
  return best;
}

}  // namespace

TrainResult train_dqn(const TrainConfig& config) {
  config.validate();
  Rng rng(config.seed);
  std::vector<int> sizes{kFeatureSize};
  sizes.insert(sizes.end(), config.hidden.begin(), config.hidden.end());
  sizes.push_back(kNumHoldemActions);
  QNetwork net(sizes, rng);
  QNetwork target = net;
  QNetwork frozen = net;
  Adam optimizer(net, config.learning_rate);
  ReplayBuffer replay(config.replay_capacity);
  TrainStats stats;
  const double stack = static_cast<double>(config.holdem.stack);
  const long random_episodes = static_cast<long>(std::llround(config.random_opponent_fraction * config.episodes));

  auto epsilon = [&]() {
    if (config.epsilon_decay_steps == 0) return config.epsilon_end;
    const double frac = std::min(1.0, static_cast<double>(stats.learner_decisions) / config.epsilon_decay_steps);
    return config.epsilon_start + frac * (config.epsilon_end - config.epsilon_start);
  };

  auto learn = [&]() {
    if (replay.size() < config.min_replay) return;
    const auto batch_items = replay.sample(config.batch_size, rng);
    TdBatch batch;
    for (const Transition* t : batch_items) {
      const double next_q = t->terminal ? 0.0 : max_legal_q(target, t->next_features, t->next_legal);
      batch.inputs.push_back(t->features);
      batch.actions.push_back(t->action);
      batch.targets.push_back(bellman_target(t->reward, config.gamma, next_q, t->terminal));
    }
    Gradients grad;
    const double loss = td_loss(net, batch, &grad);
    if (!std::isfinite(loss))
      throw Error("DQN training diverged: non-finite loss at gradient step " + std::to_string(stats.gradient_steps) +
                  " (learning_rate=" + std::to_string(config.learning_rate) + ")");
    optimizer.step(net, grad);
    stats.final_loss = loss;
    ++stats.gradient_steps;
    if (stats.gradient_steps % config.target_sync_period == 0) target = net;
  };

  for (long ep = 0; ep < config.episodes; ++ep) {
    const bool random_opponent = ep < random_episodes;
    if (!random_opponent && (ep - random_episodes) % config.snapshot_period == 0) frozen = net;

    HoldemState s = holdem_deal(derive_seed(config.seed, static_cast<std::uint64_t>(ep)),
                                static_cast<int>(ep % 2), config.holdem);
    std::optional<Transition> pending;
    while (!s.terminal()) {
      const auto legal = holdem_legal_actions(s);
      if (s.to_act == 0) {
        auto features = encode_holdem_state(s, 0);
        if (pending) {
          pending->next_features = features;
          pending->next_legal = legal;
          replay.push(std::move(*pending));
          pending.reset();
          learn();
        }
        const HoldemAction a = rng.uniform() < epsilon() ? random_legal(legal, rng) : greedy(net, s, 0);
        ++stats.learner_decisions;
        ++stats.action_counts[static_cast<int>(a)];
        Transition t;
        t.features = std::move(features);
        t.action = static_cast<int>(a);
        t.reward = shaped_reward(0.0, a, config.personality, config.shaping_bonus);
        pending = std::move(t);
        s = holdem_step(s, a);
      } else {
        const HoldemAction a = random_opponent ? random_legal(legal, rng) : greedy(frozen, s, 1);
        s = holdem_step(s, a);
      }
    }
    if (pending) {
      pending->reward += s.payoffs()[0] / stack;
      pending->terminal = true;
      pending->next_features = encode_holdem_state(s, 0);
      replay.push(std::move(*pending));
      learn();
    }
  }
  if (!net.all_finite()) throw Error("DQN training produced non-finite weights");
  return {std::move(net), stats};
}

ActionShare evaluate_action_share(const QNetwork& net, long hands, std::uint64_t seed, HoldemConfig config) {
  ActionShare share;
  Rng rng(seed);
  for (long h = 0; h < hands; ++h) {
    HoldemState s = holdem_deal(derive_seed(seed ^ 0x5eedULL, static_cast<std::uint64_t>(h)), static_cast<int>(h % 2),
                                config);
    while (!s.terminal()) {
      if (s.to_act == 0) {
        const HoldemAction a = greedy(net, s, 0);
        ++share.counts[static_cast<int>(a)];
        s = holdem_step(s, a);
      } else {
        s = holdem_step(s, random_legal(holdem_legal_actions(s), rng));
      }
    }
  }
  return share;
}

}  // namespace egoarena::dqn
