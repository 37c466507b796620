#pragma once

#include <array>
#include <span>
#include <vector>

#include "egoarena/core/rng.hpp"
#include "egoarena/engines/holdem.hpp"

namespace egoarena::dqn {

// Fully connected layer, weights row-major [out][in].
struct DenseLayer {
  int in = 0;
  int out = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  double& w(int o, int i) { return weights[static_cast<std::size_t>(o) * in + i]; }
  double w(int o, int i) const { return weights[static_cast<std::size_t>(o) * in + i]; }
};

// Multilayer perceptron with ReLU hidden activations and a linear head of
// one Q-value per Hold'em action (Fold, Check, Call, Raise).
class QNetwork {
 public:
  QNetwork() = default;
  // He-uniform initialisation drawn from `rng`; biases start at zero.
  QNetwork(std::vector<int> sizes, Rng& rng);
  // Takes ownership of pre-built layers (checkpoint loading).
  explicit QNetwork(std::vector<DenseLayer> layers);

  std::vector<double> forward(std::span<const double> input) const;

  std::vector<int> sizes() const;
  int input_size() const { return layers_.front().in; }
  std::vector<DenseLayer>& layers() { return layers_; }
  const std::vector<DenseLayer>& layers() const { return layers_; }
  bool all_finite() const;

 private:
  std::vector<DenseLayer> layers_;
};

// Same shape as the network; accumulates parameter gradients.
struct Gradients {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> bias;

  static Gradients zeros_like(const QNetwork& net);
};

struct TdBatch {
  std::vector<std::vector<double>> inputs;
  std::vector<int> actions;
  std::vector<double> targets;
};

// Mean over the batch of 0.5 (Q(s, a) - target)^2. When `grad` is non-null it
// receives d(loss)/d(parameters).
double td_loss(const QNetwork& net, const TdBatch& batch, Gradients* grad);

class Adam {
 public:
  explicit Adam(const QNetwork& net, double learning_rate, double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8);
  void step(QNetwork& net, const Gradients& grad);

 private:
  double lr_, b1_, b2_, eps_;
  long t_ = 0;
  Gradients m_, v_;
};

// Index of the largest Q among legal actions. Ties go to the earliest action
// in the order Fold < Check < Call < Raise.
HoldemAction masked_argmax(std::span<const double> q, const HoldemActionSet& legal);

}  // namespace egoarena::dqn
