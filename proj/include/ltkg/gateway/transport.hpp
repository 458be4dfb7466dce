#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ltkg::gateway {

struct HttpRequest {
  std::string method = "GET";
  std::string url;  // absolute, without any auth material
  std::string body;
  std::string content_type;
  std::vector<std::pair<std::string, std::string>> headers;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Thin seam between the gateway and the network. Implementations throw
// TransportError on connection-level failures; HTTP error statuses come back
// as normal responses.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse send(const HttpRequest& request) = 0;
};

// Live transport backed by cpp-httplib (kept in its own translation unit).
std::unique_ptr<HttpTransport> make_httplib_transport();

}  // namespace ltkg::gateway
