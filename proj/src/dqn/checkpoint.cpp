#include "egoarena/dqn/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "egoarena/core/error.hpp"

namespace egoarena::dqn {

using nlohmann::json;

namespace {

constexpr char kMagic[4] = {'E', 'Q', 'N', '1'};
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little, "checkpoint codec assumes a little-endian host");

template <typename T>
void put(std::vector<std::uint8_t>& out, T value) {
  std::uint8_t raw[sizeof(T)];
  std::memcpy(raw, &value, sizeof(T));
  out.insert(out.end(), raw, raw + sizeof(T));
}

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  template <typename T>
  T get() {
    need(sizeof(T));
    T value;
    std::memcpy(&value, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }

  std::string get_string(std::size_t n) {
    need(n);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw ConfigError("checkpoint truncated");
  }
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string config_to_json(const TrainConfig& c) {
  json j;
  j["gamma"] = c.gamma;
  j["epsilon_start"] = c.epsilon_start;
  j["epsilon_end"] = c.epsilon_end;
  j["epsilon_decay_steps"] = c.epsilon_decay_steps;
  j["replay_capacity"] = c.replay_capacity;
  j["batch_size"] = c.batch_size;
  j["min_replay"] = c.min_replay;
  j["target_sync_period"] = c.target_sync_period;
  j["learning_rate"] = c.learning_rate;
  j["personality"] = to_string(c.personality);
  j["shaping_bonus"] = c.shaping_bonus;
  j["episodes"] = c.episodes;
  j["random_opponent_fraction"] = c.random_opponent_fraction;
  j["snapshot_period"] = c.snapshot_period;
  j["hidden"] = c.hidden;
  j["seed"] = c.seed;
  j["holdem"] = {{"small_blind", c.holdem.small_blind}, {"big_blind", c.holdem.big_blind},
                 {"small_bet", c.holdem.small_bet},     {"big_bet", c.holdem.big_bet},
                 {"max_raises", c.holdem.max_raises},   {"stack", c.holdem.stack}};
  return j.dump();
}

TrainConfig config_from_json(const std::string& text) {
  TrainConfig c;
  try {
    const json j = json::parse(text);
    c.gamma = j.value("gamma", c.gamma);
    c.epsilon_start = j.value("epsilon_start", c.epsilon_start);
    c.epsilon_end = j.value("epsilon_end", c.epsilon_end);
    c.epsilon_decay_steps = j.value("epsilon_decay_steps", c.epsilon_decay_steps);
    c.replay_capacity = j.value("replay_capacity", c.replay_capacity);
    c.batch_size = j.value("batch_size", c.batch_size);
    c.min_replay = j.value("min_replay", c.min_replay);
    c.target_sync_period = j.value("target_sync_period", c.target_sync_period);
    c.learning_rate = j.value("learning_rate", c.learning_rate);
    c.personality = personality_from_string(j.value("personality", std::string("neutral")));
    c.shaping_bonus = j.value("shaping_bonus", c.shaping_bonus);
    c.episodes = j.value("episodes", c.episodes);
    c.random_opponent_fraction = j.value("random_opponent_fraction", c.random_opponent_fraction);
    c.snapshot_period = j.value("snapshot_period", c.snapshot_period);
    c.hidden = j.value("hidden", c.hidden);
    c.seed = j.value("seed", c.seed);
    if (j.contains("holdem")) {
      const auto& h = j["holdem"];
      c.holdem.small_blind = h.value("small_blind", c.holdem.small_blind);
      c.holdem.big_blind = h.value("big_blind", c.holdem.big_blind);
      c.holdem.small_bet = h.value("small_bet", c.holdem.small_bet);
      c.holdem.big_bet = h.value("big_bet", c.holdem.big_bet);
      c.holdem.max_raises = h.value("max_raises", c.holdem.max_raises);
      c.holdem.stack = h.value("stack", c.holdem.stack);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad train config JSON: ") + e.what());
  }
  return c;
}

std::vector<std::uint8_t> encode_checkpoint(const Checkpoint& ckpt) {
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  put<std::uint32_t>(out, kVersion);
  put<std::uint64_t>(out, ckpt.config.seed);
  const std::string cfg = config_to_json(ckpt.config);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(cfg.size()));
  out.insert(out.end(), cfg.begin(), cfg.end());
  const auto sizes = ckpt.network.sizes();
  put<std::uint32_t>(out, static_cast<std::uint32_t>(sizes.size()));
  for (int s : sizes) put<std::uint32_t>(out, static_cast<std::uint32_t>(s));
  for (const auto& layer : ckpt.network.layers()) {
    for (double w : layer.weights) put<double>(out, w);
    for (double b : layer.bias) put<double>(out, b);
  }
  return out;
}

Checkpoint decode_checkpoint(const std::vector<std::uint8_t>& bytes) {
  Reader in(bytes);
  if (in.get_string(4) != std::string(kMagic, 4)) throw ConfigError("not a Q-network checkpoint (bad magic)");
  if (const auto v = in.get<std::uint32_t>(); v != kVersion)
    throw ConfigError("unsupported checkpoint version " + std::to_string(v));
  const auto seed = in.get<std::uint64_t>();
  const auto cfg_len = in.get<std::uint32_t>();
  Checkpoint ckpt{config_from_json(in.get_string(cfg_len)), {}};
  ckpt.config.seed = seed;
  const auto n_sizes = in.get<std::uint32_t>();
  if (n_sizes < 2 || n_sizes > 64) throw ConfigError("implausible layer count in checkpoint");
  std::vector<int> sizes;
  for (std::uint32_t i = 0; i < n_sizes; ++i) sizes.push_back(static_cast<int>(in.get<std::uint32_t>()));
  std::vector<DenseLayer> layers;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    DenseLayer layer;
    layer.in = sizes[l];
    layer.out = sizes[l + 1];
    layer.weights.resize(static_cast<std::size_t>(layer.in) * layer.out);
    layer.bias.resize(layer.out);
    for (auto& w : layer.weights) w = in.get<double>();
    for (auto& b : layer.bias) b = in.get<double>();
    layers.push_back(std::move(layer));
  }
  if (!in.done()) throw ConfigError("trailing bytes after checkpoint weights");
  ckpt.network = QNetwork(std::move(layers));
  return ckpt;
}

void save_checkpoint(const std::string& path, const Checkpoint& ckpt) {
  const auto bytes = encode_checkpoint(ckpt);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write checkpoint " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read checkpoint " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_checkpoint(bytes);
}

}  // namespace egoarena::dqn
