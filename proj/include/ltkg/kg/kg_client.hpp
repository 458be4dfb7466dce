#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ltkg/core/types.hpp"
#include "ltkg/gateway/gateway.hpp"

namespace ltkg::kg {

enum class QueryDirection { as_subject, as_object, both };

struct TripleQuery {
  EntityRef entity;
  QueryDirection direction = QueryDirection::both;
  std::string language = "en";
};

// Relations that only produce trivial questions. Ships with the two
// Wikidata relations worth nothing to ask about; extend via config.
struct RelationBlocklist {
  std::map<std::string, std::string> relations;  // id -> label

  static RelationBlocklist defaults() {
    return RelationBlocklist{{{"P734", "family name"}, {"P735", "given name"}}};
  }
  bool contains(const std::string& relation_id) const {
    return relations.count(relation_id) > 0;
  }
};

// Renders the SELECT query fetching all direct triples where the entity
// appears in the requested position(s), with English labels. Byte-stable.
std::string build_entity_triples_query(const TripleQuery& query);

// Query for the English Wikipedia sitelink title of an entity.
std::string build_article_title_query(const std::string& entity_id);

// Query resolving a Wikipedia article title back to its entity.
std::string build_entity_by_title_query(const std::string& article_title);

// Parses a standard SPARQL JSON results document into triples. Bindings
// missing required variables raise MalformedResults; rows where neither side
// is the queried entity are dropped; duplicates collapse to one triple.
std::vector<Triple> parse_triple_bindings(const std::string& results_json,
                                          const EntityRef& entity);

class KgClient {
 public:
  KgClient(gateway::Gateway& gw, gateway::ServiceEndpoint endpoint)
      : gateway_(gw), endpoint_(std::move(endpoint)) {}

  std::vector<Triple> fetch_triples(const EntityRef& entity,
                                    QueryDirection direction = QueryDirection::both);

  std::optional<std::string> lookup_article_title(const std::string& entity_id);
  std::optional<EntityRef> lookup_entity_by_title(const std::string& article_title);

 private:
  std::string run_query(const std::string& sparql);

  gateway::Gateway& gateway_;
  gateway::ServiceEndpoint endpoint_;
};

// Removes triples whose predicate is blocklisted; order preserved.
std::vector<Triple> filter_triples(const std::vector<Triple>& triples,
                                   const RelationBlocklist& blocklist);

// Benchmark eligibility band: at least 5 and at most 100 triples after
// blocklist filtering.
bool eligible_entity(const std::vector<Triple>& filtered_triples);

}  // namespace ltkg::kg
