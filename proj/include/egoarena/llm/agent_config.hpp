#pragma once

#include <filesystem>
#include <string>

#include "egoarena/llm/chat.hpp"

namespace egoarena::llm {

// Agent spec files are YAML (JSON works too). Keys:
//
//   name: gpt4o                 # label used in logs and reports
//   provider: openai            # stub | openai
//   model: gpt-4o
//   temperature: 0.0
//   max_tokens: 512
//   seed: 7                     # optional, forwarded when the provider supports it
//   retry: {max_attempts: 3, backoff_ms: 500}
//   http: {base_url: "https://api.openai.com/v1", api_key_env: OPENAI_API_KEY}
//   stub: {policy: heuristic, responses: ["42"], cycle: false}
//
// Unknown keys are rejected so typos fail fast.
AgentSpec agent_spec_from_yaml(const std::string& text);
AgentSpec load_agent_spec(const std::filesystem::path& path);

}  // namespace egoarena::llm
