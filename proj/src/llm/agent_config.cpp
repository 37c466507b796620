#include "egoarena/llm/agent_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "egoarena/core/error.hpp"

namespace egoarena::llm {

namespace {

void check_keys(const YAML::Node& node, const std::set<std::string>& allowed, const std::string& where) {
  if (!node.IsMap()) throw ConfigError(where + " must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const YAML::Node& node, const char* key, T& out, const std::string& where) {
  if (!node[key]) return;
  try {
    out = node[key].as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError("bad value for '" + std::string(key) + "' in " + where);
  }
}

}  // namespace

AgentSpec agent_spec_from_yaml(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("agent config is not valid YAML: ") + e.what());
  }
  check_keys(root, {"name", "provider", "model", "temperature", "max_tokens", "seed", "retry", "http", "stub"},
             "agent config");
  AgentSpec spec;
  read(root, "name", spec.name, "agent config");
  read(root, "provider", spec.provider, "agent config");
  read(root, "model", spec.model, "agent config");
  read(root, "temperature", spec.temperature, "agent config");
  read(root, "max_tokens", spec.max_tokens, "agent config");
  if (root["seed"] && !root["seed"].IsNull()) {
    long long seed = 0;
    read(root, "seed", seed, "agent config");
    spec.seed = seed;
  }
  if (const auto retry = root["retry"]) {
    check_keys(retry, {"max_attempts", "backoff_ms"}, "retry");
    read(retry, "max_attempts", spec.retry.max_attempts, "retry");
    read(retry, "backoff_ms", spec.retry.backoff_ms, "retry");
  }
  if (const auto http = root["http"]) {
    check_keys(http, {"base_url", "api_key_env"}, "http");
    read(http, "base_url", spec.base_url, "http");
    read(http, "api_key_env", spec.api_key_env, "http");
  }
  if (const auto stub = root["stub"]) {
    check_keys(stub, {"policy", "responses", "cycle"}, "stub");
    read(stub, "policy", spec.stub_policy, "stub");
    read(stub, "responses", spec.stub_responses, "stub");
    read(stub, "cycle", spec.stub_cycle, "stub");
  }
  spec.validate();
  return spec;
}

AgentSpec load_agent_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read agent config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return agent_spec_from_yaml(ss.str());
}

}  // namespace egoarena::llm
