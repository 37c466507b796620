#include "egoarena/llm/chat.hpp"

#include <chrono>
#include <thread>

#include "egoarena/core/error.hpp"

namespace egoarena::llm {

using nlohmann::json;

std::string to_string(Role r) {
  switch (r) {
    case Role::System: return "system";
    case Role::User: return "user";
    case Role::Assistant: return "assistant";
  }
  return "user";
}

Role role_from_string(const std::string& s) {
  if (s == "system") return Role::System;
  if (s == "user") return Role::User;
  if (s == "assistant") return Role::Assistant;
  throw ConfigError("unknown chat role '" + s + "'");
}

namespace {
ChatMessage make(Role r, std::string content) {
  if (content.empty()) throw InvalidArgument("chat message content must be nonempty");
  return {r, std::move(content)};
}
}  // namespace

ChatMessage system_message(std::string content) { return make(Role::System, std::move(content)); }
ChatMessage user_message(std::string content) { return make(Role::User, std::move(content)); }
ChatMessage assistant_message(std::string content) { return make(Role::Assistant, std::move(content)); }

void AgentSpec::validate() const {
  if (temperature < 0.0) throw ConfigError("agent '" + name + "': temperature must be >= 0");
  if (retry.max_attempts < 1) throw ConfigError("agent '" + name + "': retry.max_attempts must be >= 1");
  if (retry.backoff_ms < 0) throw ConfigError("agent '" + name + "': retry.backoff_ms must be >= 0");
  if (max_tokens < 1) throw ConfigError("agent '" + name + "': max_tokens must be >= 1");
  if (provider != "stub" && provider != "openai")
    throw ConfigError("agent '" + name + "': unknown provider '" + provider + "'");
}

json AgentSpec::to_json() const {
  json j{{"name", name},
         {"provider", provider},
         {"model", model},
         {"temperature", temperature},
         {"max_tokens", max_tokens},
         {"retry", {{"max_attempts", retry.max_attempts}, {"backoff_ms", retry.backoff_ms}}}};
  j["seed"] = seed ? json(*seed) : json(nullptr);
  if (is_stub()) {
    j["stub"] = {{"policy", stub_policy}, {"responses", stub_responses.size()}, {"cycle", stub_cycle}};
  } else {
    j["http"] = {{"base_url", base_url}, {"api_key_env", api_key_env}};
  }
  return j;
}

json to_json(const ChatMessage& m) { return {{"role", to_string(m.role)}, {"content", m.content}}; }

ChatMessage chat_message_from_json(const json& j) {
  return {role_from_string(j.at("role").get<std::string>()), j.at("content").get<std::string>()};
}

json to_json(const Exchange& e) {
  json req = json::array();
  for (const auto& m : e.request) req.push_back(to_json(m));
  return {{"attempt", e.attempt}, {"request", req},     {"response", e.response},
          {"status", e.status},   {"error", e.error},   {"ok", e.ok},
          {"transient", e.transient}};
}

ChatClient::ChatClient(AgentSpec spec, std::shared_ptr<ChatProvider> provider, Sleeper sleeper)
    : spec_(std::move(spec)), provider_(std::move(provider)), sleeper_(std::move(sleeper)) {
  spec_.validate();
  if (!provider_) throw InvalidArgument("ChatClient needs a provider");
  if (!sleeper_) sleeper_ = [](int ms) { std::this_thread::sleep_for(std::chrono::milliseconds(ms)); };
}

std::string ChatClient::complete(const std::vector<ChatMessage>& messages) {
  int backoff = spec_.retry.backoff_ms;
  ProviderReply reply;
  for (int attempt = 1; attempt <= spec_.retry.max_attempts; ++attempt) {
    reply = provider_->send(spec_, messages);
    pending_.push_back({attempt, messages, reply.text, reply.status, reply.error, reply.ok, reply.transient});
    if (reply.ok) return reply.text;
    if (!reply.transient) break;
    if (attempt < spec_.retry.max_attempts && backoff > 0) {
      sleeper_(backoff);
      backoff *= 2;
    }
  }
  throw ProviderError("provider '" + spec_.provider + "' failed for agent '" + spec_.name + "': " + reply.error,
                      reply.status);
}

std::vector<Exchange> ChatClient::drain_exchanges() {
  std::vector<Exchange> out;
  out.swap(pending_);
  return out;
}

}  // namespace egoarena::llm
