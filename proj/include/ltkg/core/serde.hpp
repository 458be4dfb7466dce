#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltkg/core/types.hpp"

namespace ltkg {

using json = nlohmann::json;

json to_json(const EntityRef& e);
EntityRef entity_from_json(const json& j);

json to_json(const RelationRef& r);
RelationRef relation_from_json(const json& j);

json to_json(const Triple& t);
Triple triple_from_json(const json& j);

json to_json(const PopularityRecord& r);
PopularityRecord popularity_from_json(const json& j);

json to_json(const BenchmarkSample& s);
BenchmarkSample sample_from_json(const json& j);

// Schema check for one serialized sample line; returns problems (empty =
// valid). Combines structural JSON checks with check_sample().
std::vector<std::string> validate_sample_json(const json& j);

namespace io {

// One JSON document per line. Write is atomic enough for our purposes:
// callers own file-level locking.
void write_jsonl(const std::filesystem::path& path, const std::vector<json>& lines);
std::vector<json> read_jsonl(const std::filesystem::path& path);
void append_jsonl(const std::filesystem::path& path, const json& line);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace io

}  // namespace ltkg
