#include "egoarena/dqn/network.hpp"

#include <cmath>

#include "egoarena/core/error.hpp"

namespace egoarena::dqn {

QNetwork::QNetwork(std::vector<int> sizes, Rng& rng) {
  if (sizes.size() < 2) throw InvalidArgument("network needs at least an input and an output size");
  if (sizes.back() != kNumHoldemActions) throw InvalidArgument("network output size must be 4");
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    DenseLayer layer;
    layer.in = sizes[l];
    layer.out = sizes[l + 1];
    layer.weights.resize(static_cast<std::size_t>(layer.in) * layer.out);
    layer.bias.assign(layer.out, 0.0);
    const double limit = std::sqrt(6.0 / layer.in);
    for (auto& w : layer.weights) w = rng.uniform(-limit, limit);
    layers_.push_back(std::move(layer));
  }
}

QNetwork::QNetwork(std::vector<DenseLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty() || layers_.back().out != kNumHoldemActions)
    throw InvalidArgument("network output size must be 4");
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const auto& layer = layers_[l];
    if (layer.weights.size() != static_cast<std::size_t>(layer.in) * layer.out ||
        layer.bias.size() != static_cast<std::size_t>(layer.out))
      throw InvalidArgument("layer parameter count does not match its shape");
    if (l > 0 && layers_[l - 1].out != layer.in) throw InvalidArgument("layer sizes do not chain");
  }
}

namespace {

void dense_forward(const DenseLayer& layer, std::span<const double> x, std::vector<double>& y, bool relu) {
  y.assign(layer.out, 0.0);
  for (int o = 0; o < layer.out; ++o) {
    const double* row = layer.weights.data() + static_cast<std::size_t>(o) * layer.in;
    double acc = layer.bias[o];
    for (int i = 0; i < layer.in; ++i) acc += row[i] * x[i];
    y[o] = relu && acc < 0.0 ? 0.0 : acc;
  }
}

}  // namespace

std::vector<double> QNetwork::forward(std::span<const double> input) const {
  if (static_cast<int>(input.size()) != input_size()) throw InvalidArgument("network input has the wrong length");
  std::vector<double> a(input.begin(), input.end()), b;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    dense_forward(layers_[l], a, b, l + 1 < layers_.size());
    std::swap(a, b);
  }
  return a;
}

std::vector<int> QNetwork::sizes() const {
  std::vector<int> s{layers_.front().in};
  for (const auto& l : layers_) s.push_back(l.out);
  return s;
}

bool QNetwork::all_finite() const {
  for (const auto& l : layers_) {
    for (double w : l.weights)
      if (!std::isfinite(w)) return false;
    for (double b : l.bias)
      if (!std::isfinite(b)) return false;
  }
  return true;
}

Gradients Gradients::zeros_like(const QNetwork& net) {
  Gradients g;
  for (const auto& l : net.layers()) {
    g.weights.emplace_back(l.weights.size(), 0.0);
    g.bias.emplace_back(l.bias.size(), 0.0);
  }
  return g;
}

double td_loss(const QNetwork& net, const TdBatch& batch, Gradients* grad) {
  const std::size_t n = batch.inputs.size();
  if (n == 0 || batch.actions.size() != n || batch.targets.size() != n)
    throw InvalidArgument("td_loss batch is empty or ragged");
  const auto& layers = net.layers();
  const std::size_t depth = layers.size();
  if (grad) *grad = Gradients::zeros_like(net);

  double loss = 0.0;
  std::vector<std::vector<double>> acts(depth + 1);
  std::vector<double> delta, prev_delta;
  for (std::size_t s = 0; s < n; ++s) {
    acts[0] = batch.inputs[s];
    for (std::size_t l = 0; l < depth; ++l) dense_forward(layers[l], acts[l], acts[l + 1], l + 1 < depth);
    const int a = batch.actions[s];
    const double err = acts[depth][a] - batch.targets[s];
    loss += 0.5 * err * err;
    if (!grad) continue;

    delta.assign(layers.back().out, 0.0);
    delta[a] = err / static_cast<double>(n);
    for (std::size_t l = depth; l-- > 0;) {
      const DenseLayer& layer = layers[l];
      const auto& x = acts[l];
      auto& gw = grad->weights[l];
      auto& gb = grad->bias[l];
      for (int o = 0; o < layer.out; ++o) {
        const double d = delta[o];
        if (d == 0.0) continue;
        gb[o] += d;
        double* grow = gw.data() + static_cast<std::size_t>(o) * layer.in;
        for (int i = 0; i < layer.in; ++i) grow[i] += d * x[i];
      }
      if (l == 0) break;
      prev_delta.assign(layer.in, 0.0);
      for (int o = 0; o < layer.out; ++o) {
        const double d = delta[o];
        if (d == 0.0) continue;
        const double* row = layer.weights.data() + static_cast<std::size_t>(o) * layer.in;
        for (int i = 0; i < layer.in; ++i) prev_delta[i] += d * row[i];
      }
      // ReLU derivative of the hidden activation feeding this layer.
      for (int i = 0; i < layer.in; ++i)
        if (x[i] <= 0.0) prev_delta[i] = 0.0;
      std::swap(delta, prev_delta);
    }
  }
  return loss / static_cast<double>(n);
}

Adam::Adam(const QNetwork& net, double learning_rate, double beta1, double beta2, double epsilon)
    : lr_(learning_rate),
      b1_(beta1),
      b2_(beta2),
      eps_(epsilon),
      m_(Gradients::zeros_like(net)),
      v_(Gradients::zeros_like(net)) {}

void Adam::step(QNetwork& net, const Gradients& grad) {
  ++t_;
  const double c1 = 1.0 - std::pow(b1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(b2_, static_cast<double>(t_));
  auto update = [&](std::vector<double>& param, const std::vector<double>& g, std::vector<double>& m,
                    std::vector<double>& v) {
    for (std::size_t i = 0; i < param.size(); ++i) {
      m[i] = b1_ * m[i] + (1.0 - b1_) * g[i];
      v[i] = b2_ * v[i] + (1.0 - b2_) * g[i] * g[i];
      param[i] -= lr_ * (m[i] / c1) / (std::sqrt(v[i] / c2) + eps_);
    }
  };
  auto& layers = net.layers();
  for (std::size_t l = 0; l < layers.size(); ++l) {
    update(layers[l].weights, grad.weights[l], m_.weights[l], v_.weights[l]);
    update(layers[l].bias, grad.bias[l], m_.bias[l], v_.bias[l]);
  }
}

HoldemAction masked_argmax(std::span<const double> q, const HoldemActionSet& legal) {
  if (legal.empty()) throw InvalidArgument("masked_argmax over an empty action set");
  if (q.size() != kNumHoldemActions) throw InvalidArgument("Q vector must have 4 entries");
  HoldemAction best = HoldemAction::Fold;
  bool have = false;
  for (auto a : kAllHoldemActions) {
    if (!legal.contains(a)) continue;
    if (!have || q[static_cast<int>(a)] > q[static_cast<int>(best)]) {
      best = a;
      have = true;
    }
  }
  return best;
}

}  // namespace egoarena::dqn
