#include "ltkg/core/serde.hpp"

#include <fstream>

namespace ltkg {

json to_json(const EntityRef& e) { return json{{"id", e.id}, {"label", e.label}}; }

EntityRef entity_from_json(const json& j) {
  return EntityRef{j.at("id").get<std::string>(), j.value("label", std::string{})};
}

json to_json(const RelationRef& r) { return json{{"id", r.id}, {"label", r.label}}; }

RelationRef relation_from_json(const json& j) {
  return RelationRef{j.at("id").get<std::string>(), j.value("label", std::string{})};
}

json to_json(const Triple& t) {
  json object;
  if (const auto* e = std::get_if<EntityRef>(&t.object)) {
    object = json{{"entity", to_json(*e)}};
  } else {
    object = json{{"literal", std::get<Literal>(t.object).text}};
  }
  return json{{"subject", to_json(t.subject)},
              {"predicate", to_json(t.predicate)},
              {"object", object}};
}

Triple triple_from_json(const json& j) {
  Triple t;
  t.subject = entity_from_json(j.at("subject"));
  t.predicate = relation_from_json(j.at("predicate"));
  const json& object = j.at("object");
  if (object.contains("entity")) {
    t.object = entity_from_json(object.at("entity"));
  } else if (object.contains("literal")) {
    t.object = Literal{object.at("literal").get<std::string>()};
  } else {
    throw MalformedError("triple object must hold 'entity' or 'literal'");
  }
  return t;
}

json to_json(const PopularityRecord& r) {
  return json{{"entity", to_json(r.entity)},
              {"wpv", r.wpv},
              {"level", to_string(r.level)},
              {"sparse_months", r.sparse_months}};
}

PopularityRecord popularity_from_json(const json& j) {
  PopularityRecord r;
  r.entity = entity_from_json(j.at("entity"));
  r.wpv = j.at("wpv").get<double>();
  r.level = long_tail_level_from_string(j.at("level").get<std::string>());
  r.sparse_months = j.value("sparse_months", false);
  return r;
}

namespace {

const char* to_string(TurnRole role) { return role == TurnRole::user ? "user" : "agent"; }

TurnRole role_from_string(const std::string& s) {
  if (s == "user") return TurnRole::user;
  if (s == "agent") return TurnRole::agent;
  throw MalformedError("unknown turn role: " + s);
}

const char* to_string(SampleKind kind) {
  return kind == SampleKind::qa ? "qa" : "conversation";
}

SampleKind kind_from_string(const std::string& s) {
  if (s == "qa") return SampleKind::qa;
  if (s == "conversation") return SampleKind::conversation;
  throw MalformedError("unknown sample kind: " + s);
}

}  // namespace

json to_json(const BenchmarkSample& s) {
  json turns = json::array();
  for (const Turn& t : s.turns) {
    turns.push_back(json{{"role", to_string(t.role)}, {"text", t.text}});
  }
  json refs = json::array();
  for (const auto& list : s.reference_triples_per_turn) {
    json one = json::array();
    for (const Triple& t : list) one.push_back(to_json(t));
    refs.push_back(std::move(one));
  }
  return json{{"id", s.id},
              {"entity", to_json(s.entity)},
              {"level", to_string(s.level)},
              {"kind", to_string(s.kind)},
              {"turns", std::move(turns)},
              {"reference_triples_per_turn", std::move(refs)},
              {"flags", s.flags}};
}

BenchmarkSample sample_from_json(const json& j) {
  BenchmarkSample s;
  s.id = j.at("id").get<std::string>();
  s.entity = entity_from_json(j.at("entity"));
  s.level = long_tail_level_from_string(j.at("level").get<std::string>());
  s.kind = kind_from_string(j.at("kind").get<std::string>());
  for (const json& t : j.at("turns")) {
    s.turns.push_back(Turn{role_from_string(t.at("role").get<std::string>()),
                           t.at("text").get<std::string>()});
  }
  for (const json& list : j.at("reference_triples_per_turn")) {
    std::vector<Triple> one;
    for (const json& t : list) one.push_back(triple_from_json(t));
    s.reference_triples_per_turn.push_back(std::move(one));
  }
  if (j.contains("flags")) s.flags = j.at("flags").get<std::vector<std::string>>();
  return s;
}

std::vector<std::string> validate_sample_json(const json& j) {
  std::vector<std::string> problems;
  if (!j.is_object()) return {"sample line is not a JSON object"};
  for (const char* key :
       {"id", "entity", "level", "kind", "turns", "reference_triples_per_turn"}) {
    if (!j.contains(key)) problems.push_back(std::string("missing field: ") + key);
  }
  if (!problems.empty()) return problems;
  try {
    BenchmarkSample s = sample_from_json(j);
    auto structural = check_sample(s);
    problems.insert(problems.end(), structural.begin(), structural.end());
  } catch (const std::exception& e) {
    problems.push_back(std::string("unparseable sample: ") + e.what());
  }
  return problems;
}

namespace io {

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  for (const json& line : lines) out << line.dump() << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::vector<json> lines;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      lines.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw MalformedError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return lines;
}

void append_jsonl(const std::filesystem::path& path, const json& line) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open for appending: " + path.string());
  out << line.dump() << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace io

}  // namespace ltkg
