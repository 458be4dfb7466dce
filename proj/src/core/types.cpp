#include "ltkg/core/types.hpp"

#include <cmath>

namespace ltkg {

std::string object_label(const TripleObject& object) {
  if (const auto* e = std::get_if<EntityRef>(&object)) return e->label;
  return std::get<Literal>(object).text;
}

const char* to_string(LongTailLevel level) {
  switch (level) {
    case LongTailLevel::I: return "I";
    case LongTailLevel::II: return "II";
    case LongTailLevel::III: return "III";
    case LongTailLevel::IV: return "IV";
  }
  return "IV";
}

LongTailLevel long_tail_level_from_string(const std::string& s) {
  if (s == "I") return LongTailLevel::I;
  if (s == "II") return LongTailLevel::II;
  if (s == "III") return LongTailLevel::III;
  if (s == "IV") return LongTailLevel::IV;
  throw MalformedError("unknown long-tail level: " + s);
}

LongTailLevel level_of(double wpv) {
  if (!(wpv > 1e1) || !(wpv < 1e5)) {
    throw OutOfRangeError("wpv " + std::to_string(wpv) +
                          " outside the benchmark range (1e1, 1e5)");
  }
  if (wpv > 1e4) return LongTailLevel::I;
  if (wpv > 1e3) return LongTailLevel::II;
  if (wpv > 1e2) return LongTailLevel::III;
  return LongTailLevel::IV;
}

std::vector<std::string> check_sample(const BenchmarkSample& sample) {
  std::vector<std::string> problems;
  if (sample.id.empty()) problems.push_back("sample id empty");
  if (sample.entity.id.empty()) problems.push_back("entity id empty");
  if (sample.entity.label.empty()) problems.push_back("entity label empty");
  if (sample.turns.empty()) problems.push_back("no turns");

  size_t agent_turns = 0;
  size_t user_turns = 0;
  for (size_t i = 0; i < sample.turns.size(); ++i) {
    const Turn& turn = sample.turns[i];
    if (turn.text.empty()) problems.push_back("turn " + std::to_string(i) + " text empty");
    TurnRole expected = (i % 2 == 0) ? TurnRole::user : TurnRole::agent;
    if (turn.role != expected) {
      problems.push_back("turn " + std::to_string(i) + " breaks user/agent alternation");
    }
    (turn.role == TurnRole::agent ? agent_turns : user_turns)++;
  }
  if (sample.kind == SampleKind::qa && user_turns != 1) {
    problems.push_back("qa sample must have exactly one user turn");
  }
  if (sample.reference_triples_per_turn.size() != agent_turns) {
    problems.push_back("reference triple lists (" +
                       std::to_string(sample.reference_triples_per_turn.size()) +
                       ") do not match agent turn count (" + std::to_string(agent_turns) + ")");
  }
  for (const auto& refs : sample.reference_triples_per_turn) {
    for (const Triple& t : refs) {
      if (t.subject.id.empty() || t.predicate.id.empty()) {
        problems.push_back("reference triple with empty component ids");
      }
      if (const auto* lit = std::get_if<Literal>(&t.object); lit && lit->text.empty()) {
        problems.push_back("reference triple with empty literal object");
      }
    }
  }
  return problems;
}

}  // namespace ltkg
