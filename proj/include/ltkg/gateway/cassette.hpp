#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ltkg/gateway/transport.hpp"

namespace ltkg::gateway {

// Fingerprint of a request: SHA-256 over method ‖ url ‖ canonical body.
// JSON bodies are canonicalized (sorted keys, compact separators) so that
// semantically identical requests hash alike; other bodies hash raw.
std::string request_fingerprint(const HttpRequest& request);

struct CassetteEntry {
  std::string fingerprint;
  std::string method;
  std::string url;  // kept for debuggability; lookup is by fingerprint only
  int status = 0;
  std::string body;
};

// Append-ordered store of recorded responses, one JSON entry per line.
// A fingerprint uniquely keys an entry: re-recording an already-present
// request is a no-op, which keeps replays stable.
class Cassette {
 public:
  explicit Cassette(std::filesystem::path path);

  std::optional<CassetteEntry> find(const std::string& fingerprint) const;
  void record(const HttpRequest& request, const HttpResponse& response);

  size_t size() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, CassetteEntry> entries_;
  std::vector<std::string> order_;
};

}  // namespace ltkg::gateway
