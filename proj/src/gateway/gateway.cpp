#include "ltkg/gateway/gateway.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "ltkg/core/errors.hpp"
#include "ltkg/util/strings.hpp"

namespace ltkg::gateway {

using nlohmann::json;

Mode mode_from_string(const std::string& s) {
  if (s == "record") return Mode::record;
  if (s == "replay") return Mode::replay;
  if (s == "live") return Mode::live;
  throw ConfigError("unknown gateway mode: " + s);
}

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::record: return "record";
    case Mode::replay: return "replay";
    case Mode::live: return "live";
  }
  return "replay";
}

void FairGate::acquire() {
  std::unique_lock lock(mutex_);
  const std::uint64_t ticket = next_ticket_++;
  cv_.wait(lock, [&] { return ticket == serving_ && in_use_ < capacity_; });
  ++serving_;
  ++in_use_;
  cv_.notify_all();
}

void FairGate::release() {
  {
    std::lock_guard lock(mutex_);
    --in_use_;
  }
  cv_.notify_all();
}

Gateway::Gateway(Mode mode, std::shared_ptr<Cassette> cassette,
                 std::unique_ptr<HttpTransport> transport, Sleeper sleeper)
    : mode_(mode),
      cassette_(std::move(cassette)),
      transport_(std::move(transport)),
      sleeper_(std::move(sleeper)) {
  if (!sleeper_) {
    sleeper_ = [](double seconds) {
      std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    };
  }
  if (mode_ != Mode::replay && !transport_) {
    throw ConfigError("record/live mode requires a transport");
  }
  if (mode_ != Mode::live && !cassette_) {
    throw ConfigError("record/replay mode requires a cassette");
  }
}

FairGate& Gateway::gate_for(const ServiceEndpoint& endpoint) {
  std::lock_guard lock(gates_mutex_);
  auto& slot = gates_[endpoint.name.empty() ? endpoint.base_url : endpoint.name];
  if (!slot) slot = std::make_unique<FairGate>(std::max(1, endpoint.max_in_flight));
  return *slot;
}

namespace {

bool retryable_status(int status) { return status == 429 || (status >= 500 && status < 600); }

void apply_auth(const ServiceEndpoint& endpoint, HttpRequest& request) {
  if (!endpoint.auth_env) return;
  const char* secret = std::getenv(endpoint.auth_env->c_str());
  if (secret == nullptr || *secret == '\0') {
    throw AuthError("environment variable " + *endpoint.auth_env + " is not set");
  }
  if (endpoint.auth_query_param.empty()) {
    request.headers.emplace_back("Authorization", std::string("Bearer ") + secret);
  } else {
    request.url += (request.url.find('?') == std::string::npos ? '?' : '&');
    request.url += endpoint.auth_query_param + "=" + util::url_encode(secret);
  }
}

}  // namespace

HttpResponse Gateway::send_with_retries(const ServiceEndpoint& endpoint, HttpRequest request) {
  // Secrets are injected after fingerprinting so cassettes never embed them.
  apply_auth(endpoint, request);

  const RetryPolicy& policy = endpoint.retry;
  int attempts = std::max(1, policy.max_attempts);
  std::string last_failure;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      double delay = policy.backoff_seconds.empty()
                         ? 0.0
                         : policy.backoff_seconds[std::min<size_t>(
                               attempt - 1, policy.backoff_seconds.size() - 1)];
      if (delay > 0) sleeper_(delay);
    }
    try {
      HttpResponse response = transport_->send(request);
      if (retryable_status(response.status)) {
        last_failure = "status " + std::to_string(response.status);
        continue;
      }
      return response;
    } catch (const TransportError& e) {
      last_failure = e.what();
    }
  }
  throw TransportError("request to " + request.url + " failed after " +
                       std::to_string(attempts) + " attempts: " + last_failure);
}

HttpResponse Gateway::perform(const ServiceEndpoint& endpoint, const HttpRequest& request) {
  const std::string fingerprint = request_fingerprint(request);

  if (mode_ == Mode::replay) {
    auto entry = cassette_->find(fingerprint);
    if (!entry) {
      throw CassetteMissError("no recorded response for " + request.method + " " +
                              request.url + " (fingerprint " + fingerprint + ")");
    }
    return HttpResponse{entry->status, entry->body};
  }

  FairGate& gate = gate_for(endpoint);
  gate.acquire();
  HttpResponse response;
  try {
    response = send_with_retries(endpoint, request);
  } catch (...) {
    gate.release();
    throw;
  }
  gate.release();

  if (mode_ == Mode::record) cassette_->record(request, response);
  return response;
}

std::string Gateway::chat(const ServiceEndpoint& endpoint, const ChatRequest& request) {
  json body{{"model", endpoint.model},
            {"messages",
             json::array({json{{"role", "system"}, {"content", request.system_prompt}},
                          json{{"role", "user"}, {"content", request.user_prompt}}})},
            {"temperature", request.temperature},
            {"max_tokens", request.max_new_tokens}};
  HttpRequest http;
  http.method = "POST";
  http.url = endpoint.base_url + "/v1/chat/completions";
  http.body = body.dump();
  http.content_type = "application/json";

  HttpResponse response = perform(endpoint, http);
  if (response.status != 200) {
    throw TransportError("chat endpoint returned status " + std::to_string(response.status));
  }
  auto parsed = json::parse(response.body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.contains("choices") || parsed["choices"].empty()) {
    throw MalformedError("chat response lacks choices: " + response.body.substr(0, 200));
  }
  const json& message = parsed["choices"][0].value("message", json::object());
  if (!message.contains("content")) {
    throw MalformedError("chat response lacks message content");
  }
  return message.at("content").get<std::string>();
}

NliScores Gateway::nli_scores(const ServiceEndpoint& endpoint, const std::string& premise,
                              const std::string& hypothesis) {
  if (premise.empty() || hypothesis.empty()) {
    throw MalformedError("nli_scores requires non-empty premise and hypothesis");
  }
  json body{{"premise", premise}, {"hypothesis", hypothesis}};
  HttpRequest http;
  http.method = "POST";
  http.url = endpoint.base_url + "/v1/nli";
  http.body = body.dump();
  http.content_type = "application/json";

  HttpResponse response = perform(endpoint, http);
  if (response.status != 200) {
    throw TransportError("nli endpoint returned status " + std::to_string(response.status));
  }
  auto parsed = json::parse(response.body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.contains("entailment") || !parsed.contains("neutral") ||
      !parsed.contains("contradiction")) {
    throw MalformedError("nli response must carry entailment/neutral/contradiction");
  }
  NliScores scores;
  scores.entailment = parsed["entailment"].get<double>();
  scores.neutral = parsed["neutral"].get<double>();
  scores.contradiction = parsed["contradiction"].get<double>();
  double sum = scores.entailment + scores.neutral + scores.contradiction;
  if (std::abs(sum - 1.0) > 1e-6) {
    throw MalformedError("nli probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  return scores;
}

int word_count(const std::string& text) {
  return static_cast<int>(util::whitespace_tokens(text).size());
}

std::string truncate_words(const std::string& text, int max_words) {
  auto tokens = util::whitespace_tokens(text);
  if (static_cast<int>(tokens.size()) <= max_words) return text;
  tokens.resize(static_cast<size_t>(max_words));
  return util::join(tokens, " ");
}

RetrievedPassages Gateway::retrieve_passages(const ServiceEndpoint& endpoint,
                                             const std::string& query, int k) {
  if (k < 1) throw MalformedError("retrieve_passages requires k >= 1");
  json body{{"query", query}, {"k", k}};
  HttpRequest http;
  http.method = "POST";
  http.url = endpoint.base_url + "/v1/retrieve";
  http.body = body.dump();
  http.content_type = "application/json";

  HttpResponse response = perform(endpoint, http);
  if (response.status != 200) {
    throw TransportError("retriever returned status " + std::to_string(response.status));
  }
  auto parsed = json::parse(response.body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.contains("passages")) {
    throw MalformedError("retriever response lacks passages");
  }

  constexpr int kMaxPassageWords = 100;
  RetrievedPassages result;
  for (const json& p : parsed["passages"]) {
    Passage passage;
    passage.id = p.at("id").get<std::string>();
    passage.text = p.at("text").get<std::string>();
    passage.score = p.at("score").get<double>();
    if (word_count(passage.text) > kMaxPassageWords) {
      result.warnings.push_back("passage " + passage.id + " exceeds " +
                                std::to_string(kMaxPassageWords) + " words; truncated");
      passage.text = truncate_words(passage.text, kMaxPassageWords);
    }
    result.passages.push_back(std::move(passage));
    if (static_cast<int>(result.passages.size()) == k) break;
  }
  std::stable_sort(result.passages.begin(), result.passages.end(),
                   [](const Passage& a, const Passage& b) { return a.score > b.score; });
  return result;
}

}  // namespace ltkg::gateway
