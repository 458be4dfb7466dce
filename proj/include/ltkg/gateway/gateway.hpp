#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ltkg/gateway/cassette.hpp"
#include "ltkg/gateway/transport.hpp"

namespace ltkg::gateway {

enum class Mode { record, replay, live };

Mode mode_from_string(const std::string& s);
const char* to_string(Mode mode);

struct RetryPolicy {
  int max_attempts = 3;
  std::vector<double> backoff_seconds = {0.5, 1.0, 2.0};
};

struct ServiceEndpoint {
  std::string name;
  std::string base_url;
  // Name of the environment variable holding the secret; never the value.
  std::optional<std::string> auth_env;
  // Empty: secret goes into an Authorization: Bearer header. Otherwise the
  // secret is appended as this query parameter (TAGME style).
  std::string auth_query_param;
  std::string model;  // chat endpoints only
  int max_in_flight = 4;
  RetryPolicy retry;
};

struct ChatRequest {
  std::string system_prompt;
  std::string user_prompt;
  double temperature = 0.0;
  int max_new_tokens = 128;
};

struct NliScores {
  double entailment = 0.0;
  double neutral = 0.0;
  double contradiction = 0.0;
};

struct Passage {
  std::string id;
  std::string text;
  double score = 0.0;
};

struct RetrievedPassages {
  std::vector<Passage> passages;
  std::vector<std::string> warnings;
};

// FIFO gate bounding in-flight requests per endpoint. Waiters are served in
// arrival order.
class FairGate {
 public:
  explicit FairGate(int capacity) : capacity_(capacity) {}
  void acquire();
  void release();

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int capacity_;
  int in_use_ = 0;
  std::uint64_t next_ticket_ = 0;
  std::uint64_t serving_ = 0;
};

// Single home for outbound calls. In replay mode every response is served
// from the cassette and the transport is never touched; in record mode live
// responses are appended to the cassette; live mode skips recording.
class Gateway {
 public:
  using Sleeper = std::function<void(double seconds)>;

  Gateway(Mode mode, std::shared_ptr<Cassette> cassette,
          std::unique_ptr<HttpTransport> transport, Sleeper sleeper = {});

  Mode mode() const { return mode_; }

  // Generic request path used by service modules (SPARQL, pageviews, TAGME).
  // Applies rate limiting, retries on transport-class failures (connection
  // errors, 429, 5xx), and record/replay.
  HttpResponse perform(const ServiceEndpoint& endpoint, const HttpRequest& request);

  // LLM chat completion (OpenAI-style chat endpoint).
  std::string chat(const ServiceEndpoint& endpoint, const ChatRequest& request);

  // Natural-language-inference scoring; validates E + N + C = 1 (1e-6).
  NliScores nli_scores(const ServiceEndpoint& endpoint, const std::string& premise,
                       const std::string& hypothesis);

  // Dense passage retrieval; returns at most k passages with non-increasing
  // scores, each truncated to the 100-word passage limit.
  RetrievedPassages retrieve_passages(const ServiceEndpoint& endpoint,
                                      const std::string& query, int k = 10);

 private:
  HttpResponse send_with_retries(const ServiceEndpoint& endpoint, HttpRequest request);
  FairGate& gate_for(const ServiceEndpoint& endpoint);

  Mode mode_;
  std::shared_ptr<Cassette> cassette_;
  std::unique_ptr<HttpTransport> transport_;
  Sleeper sleeper_;
  std::mutex gates_mutex_;
  std::map<std::string, std::unique_ptr<FairGate>> gates_;
};

// Word count used for the passage length rule: whitespace-separated tokens.
int word_count(const std::string& text);
std::string truncate_words(const std::string& text, int max_words);

}  // namespace ltkg::gateway
