#include "ltkg/gateway/cassette.hpp"

#include <fstream>

#include <json.hpp>

#include "ltkg/core/errors.hpp"
#include "ltkg/util/hash.hpp"

namespace ltkg::gateway {

namespace {

std::string canonical_body(const std::string& body) {
  if (body.empty()) return body;
  auto parsed = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) return body;
  return parsed.dump();  // nlohmann objects are key-sorted; dump() is compact
}

}  // namespace

std::string request_fingerprint(const HttpRequest& request) {
  std::string material;
  material += request.method;
  material += '\x1f';
  material += request.url;
  material += '\x1f';
  material += canonical_body(request.body);
  return util::sha256_hex(material);
}

Cassette::Cassette(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;  // a fresh cassette starts empty
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
      throw MalformedError(path_.string() + ":" + std::to_string(lineno) +
                           ": unparseable cassette entry");
    }
    CassetteEntry entry;
    entry.fingerprint = j.at("fingerprint").get<std::string>();
    entry.method = j.value("method", std::string{});
    entry.url = j.value("url", std::string{});
    entry.status = j.at("status").get<int>();
    entry.body = j.at("body").get<std::string>();
    if (entries_.emplace(entry.fingerprint, entry).second) {
      order_.push_back(entry.fingerprint);
    }
  }
}

std::optional<CassetteEntry> Cassette::find(const std::string& fingerprint) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(fingerprint);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Cassette::record(const HttpRequest& request, const HttpResponse& response) {
  CassetteEntry entry;
  entry.fingerprint = request_fingerprint(request);
  entry.method = request.method;
  entry.url = request.url;
  entry.status = response.status;
  entry.body = response.body;

  std::lock_guard lock(mutex_);
  if (!entries_.emplace(entry.fingerprint, entry).second) return;
  order_.push_back(entry.fingerprint);

  if (!path_.parent_path().empty()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot append to cassette: " + path_.string());
  nlohmann::json j{{"fingerprint", entry.fingerprint},
                   {"method", entry.method},
                   {"url", entry.url},
                   {"status", entry.status},
                   {"body", entry.body}};
  out << j.dump() << '\n';
}

size_t Cassette::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace ltkg::gateway
