#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace egoarena::llm {

enum class Role { System, User, Assistant };

std::string to_string(Role r);
Role role_from_string(const std::string& s);

struct ChatMessage {
  Role role = Role::User;
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

ChatMessage system_message(std::string content);
ChatMessage user_message(std::string content);
ChatMessage assistant_message(std::string content);

struct RetryPolicy {
  int max_attempts = 3;
  int backoff_ms = 500;  // doubled after every failed attempt
};

// Declarative description of an agent. Loaded from a config file (see
// agent_config.hpp); providers read the fields they need.
struct AgentSpec {
  std::string name = "agent";
  std::string provider = "stub";  // "stub" or "openai" (any OpenAI-compatible endpoint)
  std::string model = "scripted";
  double temperature = 0.0;
  int max_tokens = 512;
  std::optional<long long> seed;
  RetryPolicy retry;

  // provider = "openai"
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key_env = "OPENAI_API_KEY";

  // provider = "stub"
  std::string stub_policy;               // built-in responder name, e.g. "heuristic"
  std::vector<std::string> stub_responses;  // fixed reply queue when no policy is set
  bool stub_cycle = false;

  // Throws ConfigError on violated ranges (temperature >= 0, attempts >= 1).
  void validate() const;
  nlohmann::json to_json() const;
  bool is_stub() const { return provider == "stub"; }
};

struct ProviderReply {
  bool ok = false;
  std::string text;
  int status = 0;          // transport / HTTP status, 0 when not applicable
  std::string error;
  bool transient = false;  // eligible for retry
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual ProviderReply send(const AgentSpec& spec, const std::vector<ChatMessage>& messages) = 0;
};

// One request/response attempt, as persisted in session logs.
struct Exchange {
  int attempt = 1;
  std::vector<ChatMessage> request;
  std::string response;
  int status = 0;
  std::string error;
  bool ok = false;
  bool transient = false;
};

nlohmann::json to_json(const ChatMessage& m);
ChatMessage chat_message_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Exchange& e);

// Sends chat requests through a provider, retrying transient failures per the
// spec's retry policy. Every attempt is recorded before complete() returns;
// callers collect them with drain_exchanges().
class ChatClient {
 public:
  using Sleeper = std::function<void(int milliseconds)>;

  ChatClient(AgentSpec spec, std::shared_ptr<ChatProvider> provider, Sleeper sleeper = {});

  // Throws ProviderError once attempts are exhausted or on a permanent failure.
  std::string complete(const std::vector<ChatMessage>& messages);

  std::vector<Exchange> drain_exchanges();
  const AgentSpec& spec() const { return spec_; }

 private:
  AgentSpec spec_;
  std::shared_ptr<ChatProvider> provider_;
  Sleeper sleeper_;
  std::vector<Exchange> pending_;
};

}  // namespace egoarena::llm
