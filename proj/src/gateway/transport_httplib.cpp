// httplib pulls in OpenSSL headers whose macros clash with Eigen; this file
// must stay the only translation unit that includes it.
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "ltkg/core/errors.hpp"
#include "ltkg/gateway/transport.hpp"

namespace ltkg::gateway {

namespace {

// Splits "https://host:port/path?query" into (scheme://host[:port], /path?query).
std::pair<std::string, std::string> split_url(const std::string& url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw TransportError("url without scheme: " + url);
  }
  size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

class HttplibTransport final : public HttpTransport {
 public:
  HttpResponse send(const HttpRequest& request) override {
    auto [origin, path] = split_url(request.url);
    httplib::Client client(origin);
    client.set_connection_timeout(15);
    client.set_read_timeout(120);
    client.set_follow_location(true);

    httplib::Headers headers;
    for (const auto& [name, value] : request.headers) headers.emplace(name, value);

    httplib::Result result;
    if (request.method == "GET") {
      result = client.Get(path, headers);
    } else if (request.method == "POST") {
      result = client.Post(path, headers, request.body,
                           request.content_type.empty() ? "application/octet-stream"
                                                        : request.content_type);
    } else {
      throw TransportError("unsupported method: " + request.method);
    }
    if (!result) {
      throw TransportError("request to " + request.url + " failed: " +
                           httplib::to_string(result.error()));
    }
    return HttpResponse{result->status, result->body};
  }
};

}  // namespace

std::unique_ptr<HttpTransport> make_httplib_transport() {
  return std::make_unique<HttplibTransport>();
}

}  // namespace ltkg::gateway
