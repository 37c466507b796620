#pragma once

#include <cstddef>
#include <vector>

#include "egoarena/core/rng.hpp"
#include "egoarena/engines/holdem.hpp"

namespace egoarena::dqn {

struct Transition {
  std::vector<double> features;
  int action = 0;
  double reward = 0;  // already shaped
  std::vector<double> next_features;
  HoldemActionSet next_legal;  // empty when terminal
  bool terminal = false;
};

// Fixed-capacity ring buffer; once full, the oldest transition is overwritten.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(Transition t);
  // Uniform sampling with replacement.
  std::vector<const Transition*> sample(std::size_t batch, Rng& rng) const;

  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  // Oldest-first view, for tests and diagnostics.
  const Transition& oldest(std::size_t offset = 0) const;

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // next slot to overwrite once full
  std::vector<Transition> items_;
};

}  // namespace egoarena::dqn
