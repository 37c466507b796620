#include "egoarena/dqn/replay.hpp"

#include "egoarena/core/error.hpp"

namespace egoarena::dqn {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw InvalidArgument("replay capacity must be positive");
  items_.reserve(capacity);
}

void ReplayBuffer::push(Transition t) {
  if (items_.size() < capacity_) {
    items_.push_back(std::move(t));
    return;
  }
  items_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

std::vector<const Transition*> ReplayBuffer::sample(std::size_t batch, Rng& rng) const {
  if (items_.empty()) throw InvalidArgument("sampling from an empty replay buffer");
  std::vector<const Transition*> out;
  out.reserve(batch);
  for (std::size_t i = 0; i < batch; ++i) out.push_back(&items_[rng.below(items_.size())]);
  return out;
}

const Transition& ReplayBuffer::oldest(std::size_t offset) const {
  if (offset >= items_.size()) throw InvalidArgument("replay offset out of range");
  const std::size_t start = items_.size() < capacity_ ? 0 : head_;
  return items_[(start + offset) % items_.size()];
}

}  // namespace egoarena::dqn
