#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egoarena/dqn/network.hpp"
#include "egoarena/dqn/trainer.hpp"

namespace egoarena::dqn {

// Checkpoint byte layout, all integers and doubles little-endian:
//
//   offset  size   field
//   0       4      magic "EQN1"
//   4       4      u32 format version (1)
//   8       8      u64 training seed
//   16      4      u32 config length L
//   20      L      training config as UTF-8 JSON (sorted keys)
//   20+L    4      u32 number of sizes S (input, hidden..., output)
//   ...     4*S    u32 layer sizes
//   then, for each layer in order: out*in f64 weights (row-major [out][in]),
//   followed by out f64 biases.
struct Checkpoint {
  TrainConfig config;
  QNetwork network;
};

std::vector<std::uint8_t> encode_checkpoint(const Checkpoint& ckpt);
Checkpoint decode_checkpoint(const std::vector<std::uint8_t>& bytes);

void save_checkpoint(const std::string& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::string& path);

std::string config_to_json(const TrainConfig& config);
TrainConfig config_from_json(const std::string& json);

}  // namespace egoarena::dqn
