#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "egoarena/llm/chat.hpp"

namespace egoarena::llm {

// Replays a fixed queue of replies. A step with a nonzero fail_status or the
// permanent flag is delivered as a failure with that status instead of text.
// An empty queue answers with a permanent error.
class ScriptedProvider : public ChatProvider {
 public:
  struct Step {
    Step(std::string text = {}, int fail_status = 0, bool permanent = false, std::string error = {})
        : text(std::move(text)), fail_status(fail_status), permanent(permanent), error(std::move(error)) {}
    std::string text;
    int fail_status = 0;
    bool permanent = false;  // failure that is not retried
    std::string error;       // message for a failure; defaults to "scripted failure <status>"
  };

  explicit ScriptedProvider(std::vector<std::string> replies, bool cycle = false);
  explicit ScriptedProvider(std::vector<Step> steps, bool cycle = false);

  ProviderReply send(const AgentSpec& spec, const std::vector<ChatMessage>& messages) override;
  std::size_t remaining() const;

 private:
  std::vector<Step> steps_;
  std::size_t next_ = 0;
  bool cycle_;
  mutable std::mutex mu_;
};

// Computes each reply from the conversation; used for rule-based agents and
// deterministic test doubles.
class FunctionProvider : public ChatProvider {
 public:
  using Responder = std::function<std::string(const std::vector<ChatMessage>&)>;
  explicit FunctionProvider(Responder fn) : fn_(std::move(fn)) {}
  ProviderReply send(const AgentSpec& spec, const std::vector<ChatMessage>& messages) override;

 private:
  Responder fn_;
};

// OpenAI-compatible chat-completions client (POST {base_url}/chat/completions).
// The API key is read from the environment variable named by
// AgentSpec::api_key_env. HTTP 408, 429 and 5xx and connection failures are
// transient.
class HttpChatProvider : public ChatProvider {
 public:
  ProviderReply send(const AgentSpec& spec, const std::vector<ChatMessage>& messages) override;

  // Request body for the wire format; exposed for tests.
  static nlohmann::json request_body(const AgentSpec& spec, const std::vector<ChatMessage>& messages);
  // Extracts choices[0].message.content.
  static ProviderReply parse_response(int status, const std::string& body);
};

// Provider for a spec: scripted queue, built-in stub policy, or HTTP.
std::shared_ptr<ChatProvider> make_provider(const AgentSpec& spec);

// Convenience: a client over make_provider(spec). Stub clients never sleep.
ChatClient make_client(const AgentSpec& spec);

}  // namespace egoarena::llm
