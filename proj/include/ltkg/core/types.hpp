#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ltkg/core/errors.hpp"

namespace ltkg {

struct EntityRef {
  std::string id;     // KG identifier, e.g. "Q42"
  std::string label;  // human-readable surface form

  bool operator==(const EntityRef&) const = default;
};

struct RelationRef {
  std::string id;     // KG identifier, e.g. "P19"
  std::string label;

  bool operator==(const RelationRef&) const = default;
};

struct Literal {
  std::string text;

  bool operator==(const Literal&) const = default;
};

using TripleObject = std::variant<EntityRef, Literal>;

struct Triple {
  EntityRef subject;
  RelationRef predicate;
  TripleObject object;

  bool operator==(const Triple&) const = default;
};

// Surface form of a triple's object: entity label or literal text.
std::string object_label(const TripleObject& object);

enum class LongTailLevel { I, II, III, IV };

const char* to_string(LongTailLevel level);
LongTailLevel long_tail_level_from_string(const std::string& s);

// Buckets an average monthly page-view count into its long-tail level.
// Ranges are half-open (lower, upper]: I = (1e4, 1e5], II = (1e3, 1e4],
// III = (1e2, 1e3], IV = (1e1, 1e2]. Values at or below 10, or at or above
// 1e5, are outside the benchmark and raise OutOfRange.
LongTailLevel level_of(double wpv);

struct PopularityRecord {
  EntityRef entity;
  double wpv = 0.0;
  LongTailLevel level = LongTailLevel::IV;
  // Months with no pageview data were filled as zero; auditors may want to
  // exclude entities with sparse series.
  bool sparse_months = false;

  bool operator==(const PopularityRecord&) const = default;
};

enum class TurnRole { user, agent };

struct Turn {
  TurnRole role = TurnRole::user;
  std::string text;

  bool operator==(const Turn&) const = default;
};

enum class SampleKind { qa, conversation };

struct BenchmarkSample {
  std::string id;
  EntityRef entity;
  LongTailLevel level = LongTailLevel::IV;
  SampleKind kind = SampleKind::qa;
  // Roles strictly alternate starting with user. QA samples hold exactly one
  // user turn plus the expected-answer agent turn.
  std::vector<Turn> turns;
  // One entry per agent turn, in turn order.
  std::vector<std::vector<Triple>> reference_triples_per_turn;
  // Quality flags raised during generation (e.g. "unmatched_triple").
  std::vector<std::string> flags;

  bool operator==(const BenchmarkSample&) const = default;
};

// Checks the structural invariants of a sample; returns a list of problems
// (empty means valid).
std::vector<std::string> check_sample(const BenchmarkSample& sample);

}  // namespace ltkg
