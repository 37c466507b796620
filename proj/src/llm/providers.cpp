#include "egoarena/llm/providers.hpp"

#include <cstdlib>

#include <httplib.h>

#include "egoarena/core/error.hpp"
#include "egoarena/llm/stub_policy.hpp"

namespace egoarena::llm {

using nlohmann::json;

namespace {
std::vector<ScriptedProvider::Step> to_steps(std::vector<std::string> replies) {
  std::vector<ScriptedProvider::Step> steps;
  for (auto& r : replies) steps.push_back({std::move(r), 0, false});
  return steps;
}
}  // namespace

ScriptedProvider::ScriptedProvider(std::vector<std::string> replies, bool cycle)
    : ScriptedProvider(to_steps(std::move(replies)), cycle) {}

ScriptedProvider::ScriptedProvider(std::vector<Step> steps, bool cycle) : steps_(std::move(steps)), cycle_(cycle) {}

ProviderReply ScriptedProvider::send(const AgentSpec&, const std::vector<ChatMessage>&) {
  std::lock_guard lock(mu_);
  if (cycle_ && !steps_.empty() && next_ == steps_.size()) next_ = 0;
  if (next_ >= steps_.size()) return {false, {}, 0, "scripted reply queue is empty", false};
  const Step& s = steps_[next_++];
  if (s.fail_status != 0 || s.permanent || !s.error.empty())
    return {false, {}, s.fail_status,
            s.error.empty() ? "scripted failure " + std::to_string(s.fail_status) : s.error, !s.permanent};
  return {true, s.text, 200, {}, false};
}

std::size_t ScriptedProvider::remaining() const {
  std::lock_guard lock(mu_);
  return steps_.size() - next_;
}

ProviderReply FunctionProvider::send(const AgentSpec&, const std::vector<ChatMessage>& messages) {
  return {true, fn_(messages), 200, {}, false};
}

json HttpChatProvider::request_body(const AgentSpec& spec, const std::vector<ChatMessage>& messages) {
  json msgs = json::array();
  for (const auto& m : messages) msgs.push_back(to_json(m));
  json body{{"model", spec.model}, {"messages", msgs}, {"temperature", spec.temperature},
            {"max_tokens", spec.max_tokens}};
  if (spec.seed) body["seed"] = *spec.seed;
  return body;
}

ProviderReply HttpChatProvider::parse_response(int status, const std::string& body) {
  ProviderReply r;
  r.status = status;
  if (status < 200 || status >= 300) {
    r.error = "HTTP " + std::to_string(status) + ": " + body.substr(0, 300);
    r.transient = status == 408 || status == 429 || status >= 500;
    return r;
  }
  try {
    const json j = json::parse(body);
    const auto& content = j.at("choices").at(0).at("message").at("content");
    if (!content.is_string() || content.get<std::string>().empty()) {
      r.error = "response has no message content";
      return r;
    }
    r.ok = true;
    r.text = content.get<std::string>();
  } catch (const json::exception& e) {
    r.error = std::string("malformed response body: ") + e.what();
  }
  return r;
}

ProviderReply HttpChatProvider::send(const AgentSpec& spec, const std::vector<ChatMessage>& messages) {
  const char* key = std::getenv(spec.api_key_env.c_str());
  if (!key || !*key) return {false, {}, 0, "environment variable " + spec.api_key_env + " is not set", false};

  // base_url = scheme://host[:port][/prefix]
  const auto scheme_end = spec.base_url.find("://");
  const auto path_start = spec.base_url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  const std::string origin = spec.base_url.substr(0, path_start);
  std::string prefix = path_start == std::string::npos ? "" : spec.base_url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

  httplib::Client client(origin);
  client.set_connection_timeout(30);
  client.set_read_timeout(300);
  httplib::Headers headers{{"Authorization", std::string("Bearer ") + key}};
  auto res = client.Post(prefix + "/chat/completions", headers, request_body(spec, messages).dump(),
                         "application/json");
  if (!res) return {false, {}, 0, "transport error: " + httplib::to_string(res.error()), true};
  return parse_response(res->status, res->body);
}

std::shared_ptr<ChatProvider> make_provider(const AgentSpec& spec) {
  spec.validate();
  if (!spec.is_stub()) return std::make_shared<HttpChatProvider>();
  if (spec.stub_policy == "heuristic") {
    const auto seed = static_cast<std::uint64_t>(spec.seed.value_or(0));
    return std::make_shared<FunctionProvider>(
        [seed](const std::vector<ChatMessage>& m) { return heuristic_reply(m, seed); });
  }
  if (!spec.stub_policy.empty() && spec.stub_policy != "scripted")
    throw ConfigError("agent '" + spec.name + "': unknown stub policy '" + spec.stub_policy + "'");
  return std::make_shared<ScriptedProvider>(spec.stub_responses, spec.stub_cycle);
}

ChatClient make_client(const AgentSpec& spec) {
  auto sleeper = spec.is_stub() ? ChatClient::Sleeper([](int) {}) : ChatClient::Sleeper{};
  return ChatClient(spec, make_provider(spec), sleeper);
}

}  // namespace egoarena::llm
