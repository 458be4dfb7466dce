#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltkg/core/types.hpp"
#include "ltkg/gateway/gateway.hpp"
#include "ltkg/util/rng.hpp"

namespace ltkg::popularity {

struct MonthCount {
  std::string month;  // "YYYY-MM"
  std::uint64_t views = 0;
  bool missing = false;  // the API returned no data point for this month
};

struct PageviewSeries {
  EntityRef entity;
  std::string article_title;
  std::vector<MonthCount> monthly_views;  // contiguous months of the window
};

// Half-open month window [start, end), e.g. 2021-01 .. 2023-01 covers the
// 24 months of 2021 and 2022.
struct MonthWindow {
  std::string start = "2021-01";
  std::string end = "2023-01";
};

std::vector<std::string> months_in_window(const MonthWindow& window);

struct SamplingPlan {
  std::map<LongTailLevel, int> targets = {{LongTailLevel::I, 500},
                                          {LongTailLevel::II, 500},
                                          {LongTailLevel::III, 500},
                                          {LongTailLevel::IV, 500}};
  std::uint64_t seed = 0;
  MonthWindow window;
};

// Fetches the monthly pageview series for one entity from a Wikimedia-style
// per-article endpoint. `article_title` comes from the KG sitelink lookup;
// callers pass std::nullopt when the entity has no article, which raises
// NoArticle. Months absent from the response are recorded as zero views
// with a `missing` flag.
PageviewSeries fetch_pageviews(gateway::Gateway& gw, const gateway::ServiceEndpoint& endpoint,
                               const EntityRef& entity,
                               const std::optional<std::string>& article_title,
                               const MonthWindow& window);

// Arithmetic mean of the monthly counts. Throws EmptySeries.
double compute_wpv(const PageviewSeries& series);

struct SampledLevels {
  std::map<LongTailLevel, std::vector<PopularityRecord>> per_level;
  // Levels whose candidate pool fell short of the target, with the shortfall.
  std::map<LongTailLevel, int> shortfall;
};

// Uniform without-replacement sample per level, deterministic under
// plan.seed. Shortfalls are reported, never fatal.
SampledLevels sample_entities(const std::vector<PopularityRecord>& candidates,
                              const SamplingPlan& plan);

// Reservoir sampling over a caller-supplied entity stream; used to build the
// candidate pool when the full entity universe cannot be materialized.
class ReservoirSampler {
 public:
  ReservoirSampler(size_t capacity, std::uint64_t seed);
  void offer(EntityRef entity);
  // Sampled entities in first-seen order.
  std::vector<EntityRef> take() const;
  size_t seen() const { return seen_; }

 private:
  size_t capacity_;
  util::Rng rng_;
  size_t seen_ = 0;
  std::vector<std::pair<size_t, EntityRef>> slots_;  // (arrival index, entity)
};

}  // namespace ltkg::popularity
