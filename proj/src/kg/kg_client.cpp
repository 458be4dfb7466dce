#include "ltkg/kg/kg_client.hpp"

#include <algorithm>

#include <json.hpp>

#include "ltkg/core/errors.hpp"
#include "ltkg/util/strings.hpp"

namespace ltkg::kg {

using nlohmann::json;

namespace {

constexpr const char* kPrefixes =
    "PREFIX wd: <http://www.wikidata.org/entity/>\n"
    "PREFIX wdt: <http://www.wikidata.org/prop/direct/>\n"
    "PREFIX wikibase: <http://wikiba.se/ontology#>\n"
    "PREFIX bd: <http://www.bigdata.com/rdf#>\n"
    "PREFIX schema: <http://schema.org/>\n";

std::string subject_branch(const std::string& id) {
  return "  {\n"
         "    BIND(wd:" + id + " AS ?subject)\n"
         "    ?subject ?predicate ?object .\n"
         "    FILTER(STRSTARTS(STR(?predicate), STR(wdt:)))\n"
         "  }\n";
}

std::string object_branch(const std::string& id) {
  return "  {\n"
         "    BIND(wd:" + id + " AS ?object)\n"
         "    ?subject ?predicate ?object .\n"
         "    FILTER(STRSTARTS(STR(?predicate), STR(wdt:)))\n"
         "  }\n";
}

// Extracts the trailing identifier of a Wikidata URI ("…/entity/Q42" -> Q42,
// "…/prop/direct/P19" -> P19).
std::string uri_local_name(const std::string& uri) {
  size_t slash = uri.find_last_of('/');
  return slash == std::string::npos ? uri : uri.substr(slash + 1);
}

struct Binding {
  std::string type;
  std::string value;
};

std::optional<Binding> get_binding(const json& row, const char* var) {
  if (!row.contains(var)) return std::nullopt;
  const json& cell = row.at(var);
  return Binding{cell.value("type", std::string{}), cell.value("value", std::string{})};
}

}  // namespace

std::string build_entity_triples_query(const TripleQuery& query) {
  std::string body;
  switch (query.direction) {
    case QueryDirection::as_subject:
      body = subject_branch(query.entity.id);
      break;
    case QueryDirection::as_object:
      body = object_branch(query.entity.id);
      break;
    case QueryDirection::both:
      body = subject_branch(query.entity.id) + "  UNION\n" + object_branch(query.entity.id);
      break;
  }
  return std::string(kPrefixes) +
         "SELECT DISTINCT ?subject ?subjectLabel ?predicate ?predicateLabel ?object "
         "?objectLabel WHERE {\n" +
         body +
         "  SERVICE wikibase:label { bd:serviceParam wikibase:language \"" + query.language +
         "\". }\n"
         "}\n";
}

std::string build_article_title_query(const std::string& entity_id) {
  return std::string(kPrefixes) +
         "SELECT ?title WHERE {\n"
         "  ?article schema:about wd:" + entity_id + " ;\n"
         "           schema:isPartOf <https://en.wikipedia.org/> ;\n"
         "           schema:name ?title .\n"
         "}\n";
}

std::string build_entity_by_title_query(const std::string& article_title) {
  std::string escaped = util::replace_all(article_title, "\\", "\\\\");
  escaped = util::replace_all(escaped, "\"", "\\\"");
  return std::string(kPrefixes) +
         "SELECT ?entity ?entityLabel WHERE {\n"
         "  ?article schema:about ?entity ;\n"
         "           schema:isPartOf <https://en.wikipedia.org/> ;\n"
         "           schema:name \"" + escaped + "\"@en .\n"
         "  SERVICE wikibase:label { bd:serviceParam wikibase:language \"en\". }\n"
         "}\n";
}

std::vector<Triple> parse_triple_bindings(const std::string& results_json,
                                          const EntityRef& entity) {
  auto parsed = json::parse(results_json, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.contains("results") ||
      !parsed["results"].contains("bindings")) {
    throw MalformedResultsError("SPARQL results missing results.bindings");
  }

  std::vector<Triple> triples;
  std::set<std::string> seen;
  for (const json& row : parsed["results"]["bindings"]) {
    auto subject = get_binding(row, "subject");
    auto predicate = get_binding(row, "predicate");
    auto object = get_binding(row, "object");
    if (!subject || !predicate || !object) {
      throw MalformedResultsError("binding row lacks subject/predicate/object");
    }

    Triple triple;
    triple.subject.id = uri_local_name(subject->value);
    if (auto label = get_binding(row, "subjectLabel")) triple.subject.label = label->value;
    if (triple.subject.label.empty()) triple.subject.label = triple.subject.id;

    triple.predicate.id = uri_local_name(predicate->value);
    if (auto label = get_binding(row, "predicateLabel")) triple.predicate.label = label->value;

    if (object->type == "uri") {
      EntityRef obj;
      obj.id = uri_local_name(object->value);
      if (auto label = get_binding(row, "objectLabel")) obj.label = label->value;
      if (obj.label.empty()) obj.label = obj.id;
      triple.object = obj;
    } else {
      std::string text = object->value;
      if (auto label = get_binding(row, "objectLabel"); label && !label->value.empty()) {
        text = label->value;
      }
      if (text.empty()) continue;
      triple.object = Literal{text};
    }

    // The query binds the target entity on one side; drop any stray row.
    bool subject_is_entity = triple.subject.id == entity.id;
    bool object_is_entity = false;
    if (const auto* obj = std::get_if<EntityRef>(&triple.object)) {
      object_is_entity = obj->id == entity.id;
    }
    if (!subject_is_entity && !object_is_entity) continue;

    std::string key = triple.subject.id + "\x1f" + triple.predicate.id + "\x1f" +
                      (std::holds_alternative<EntityRef>(triple.object)
                           ? std::get<EntityRef>(triple.object).id
                           : std::get<Literal>(triple.object).text);
    if (seen.insert(key).second) triples.push_back(std::move(triple));
  }
  return triples;
}

std::string KgClient::run_query(const std::string& sparql) {
  gateway::HttpRequest http;
  http.method = "POST";
  http.url = endpoint_.base_url;
  http.body = sparql;
  http.content_type = "application/sparql-query";
  http.headers.emplace_back("Accept", "application/sparql-results+json");
  gateway::HttpResponse response = gateway_.perform(endpoint_, http);
  if (response.status != 200) {
    throw TransportError("SPARQL endpoint returned status " + std::to_string(response.status));
  }
  return response.body;
}

std::vector<Triple> KgClient::fetch_triples(const EntityRef& entity, QueryDirection direction) {
  TripleQuery query;
  query.entity = entity;
  query.direction = direction;
  return parse_triple_bindings(run_query(build_entity_triples_query(query)), entity);
}

std::optional<std::string> KgClient::lookup_article_title(const std::string& entity_id) {
  std::string body = run_query(build_article_title_query(entity_id));
  auto parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.contains("results")) {
    throw MalformedResultsError("SPARQL results missing for title lookup");
  }
  for (const json& row : parsed["results"].value("bindings", json::array())) {
    if (row.contains("title")) return row["title"].value("value", std::string{});
  }
  return std::nullopt;
}

std::optional<EntityRef> KgClient::lookup_entity_by_title(const std::string& article_title) {
  std::string body = run_query(build_entity_by_title_query(article_title));
  auto parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.contains("results")) {
    throw MalformedResultsError("SPARQL results missing for entity lookup");
  }
  for (const json& row : parsed["results"].value("bindings", json::array())) {
    if (!row.contains("entity")) continue;
    EntityRef entity;
    entity.id = uri_local_name(row["entity"].value("value", std::string{}));
    if (row.contains("entityLabel")) entity.label = row["entityLabel"].value("value", std::string{});
    if (entity.label.empty()) entity.label = entity.id;
    if (!entity.id.empty()) return entity;
  }
  return std::nullopt;
}

std::vector<Triple> filter_triples(const std::vector<Triple>& triples,
                                   const RelationBlocklist& blocklist) {
  std::vector<Triple> out;
  out.reserve(triples.size());
  for (const Triple& t : triples) {
    if (!blocklist.contains(t.predicate.id)) out.push_back(t);
  }
  return out;
}

bool eligible_entity(const std::vector<Triple>& filtered_triples) {
  size_t n = filtered_triples.size();
  return n >= 5 && n <= 100;
}

}  // namespace ltkg::kg
