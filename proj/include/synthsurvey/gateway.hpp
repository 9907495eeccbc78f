// Copyright 2026 The synthsurvey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNTHSURVEY_GATEWAY_HPP
#define SYNTHSURVEY_GATEWAY_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synthsurvey/answer_scale.hpp"
#include "synthsurvey/domain.hpp"
#include "synthsurvey/response_cache.hpp"

namespace synthsurvey {

inline constexpr std::string_view kEndpointEnvVar = "SYNTHSURVEY_ENDPOINT";
inline constexpr std::string_view kApiKeyEnvVar = "SYNTHSURVEY_API_KEY";

struct ModelConfig {
  std::string model_id = "gpt-3.5-turbo-0613";
  double temperature = 0.0;
  std::string endpoint;  // full URL of the chat completions resource
  std::string api_key;
  int max_retries = 3;
  int max_concurrency = 4;
  std::chrono::milliseconds timeout{60000};
  std::chrono::milliseconds backoff_base{500};
  /// Above this temperature replies degrade into noise; raising it needs
  /// allow_above_cap.
  double temperature_cap = 1.5;
  bool allow_above_cap = false;

  /// Throws Error on a temperature outside [0, cap] (or [0, 2] with the
  /// override) and on non-positive concurrency or negative retries.
  void validate() const;

  /// Copies `base` and fills endpoint and key from the environment when they
  /// are empty.
  static ModelConfig with_environment(ModelConfig base);
};

/// Errors raised by complete(). Each carries the persona the request was for
/// (empty for free-standing prompts such as knowledge probes).
class GatewayError : public Error {
 public:
  GatewayError(const std::string& what, std::string persona_id, int attempts);
  const std::string& persona_id() const { return persona_id_; }
  int attempts() const { return attempts_; }

 private:
  std::string persona_id_;
  int attempts_;
};

class TransportError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

class HttpStatusError : public GatewayError {
 public:
  HttpStatusError(const std::string& what, std::string persona_id, int attempts,
                  int status);
  int status() const { return status_; }

 private:
  int status_;
};

class MalformedResponseError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

/// What the respondent is, alongside the prompt text. Remote backends only
/// see the text; offline backends answer from this instead of parsing
/// prompts.
struct RequestContext {
  const Persona* persona = nullptr;
  TreatmentVector treatment;
  const SurveyQuestion* question = nullptr;
};

struct ChatExchange {
  ChatRequest request;
  std::string reply_text;
  std::chrono::milliseconds latency{0};
  int attempt_count = 0;
  bool from_cache = false;
  std::string timestamp;
};

class ChatBackend {
 public:
  struct Result {
    enum class Kind { ok, transport_failure, http_status, malformed };
    Kind kind = Kind::ok;
    int status = 0;
    std::string content;  // assistant message when ok
    std::string detail;   // diagnostic otherwise
  };

  virtual ~ChatBackend() = default;
  virtual Result attempt(const ChatRequest& request, const ModelConfig& config,
                         const RequestContext& context) = 0;
};

/// Chat-completions JSON over HTTP(S): model id, a system and a user message,
/// and the temperature. The reply is the first choice's message content.
class HttpChatBackend : public ChatBackend {
 public:
  Result attempt(const ChatRequest& request, const ModelConfig& config,
                 const RequestContext& context) override;

  static std::string request_body(const ChatRequest& request);
  /// Extracts choices[0].message.content; nullopt if the body is malformed.
  static std::optional<std::string> parse_reply_body(std::string_view body);
};

/// Cache in front of a backend, with retry and exponential backoff.
class Gateway {
 public:
  Gateway(std::shared_ptr<ChatBackend> backend,
          std::shared_ptr<ResponseCache> cache);

  /// Returns the cached reply if present; otherwise calls the backend,
  /// retrying transport failures, 429 and 5xx up to max_retries times.
  /// Exhausted retries raise TransportError, other statuses HttpStatusError,
  /// unparseable bodies MalformedResponseError.
  ChatExchange complete(const ModelConfig& config, std::string_view system_text,
                        std::string_view user_text, std::uint64_t permutation_seed,
                        const RequestContext& context = {},
                        std::string_view persona_id = {});

  ResponseCache& cache() { return *cache_; }
  /// Number of backend attempts made so far (cache hits excluded).
  std::size_t backend_calls() const { return backend_calls_.load(); }

 private:
  std::shared_ptr<ChatBackend> backend_;
  std::shared_ptr<ResponseCache> cache_;
  std::atomic<std::size_t> backend_calls_{0};
};

/// Maps a free-text reply to an option value: a leading option number in
/// presentation order, or else a unique case- and whitespace-insensitive
/// label match. Ambiguous or unmatched replies are missing.
std::optional<double> parse_choice(std::string_view reply_text,
                                   std::span<const std::string> presented_options,
                                   const AnswerScale& scale);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_GATEWAY_HPP
