#include "ltkg/popularity/popularity.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "ltkg/core/errors.hpp"
#include "ltkg/util/rng.hpp"
#include "ltkg/util/strings.hpp"

namespace ltkg::popularity {

using nlohmann::json;

namespace {

struct YearMonth {
  int year = 0;
  int month = 0;
};

YearMonth parse_month(const std::string& s) {
  if (s.size() != 7 || s[4] != '-') throw ConfigError("bad month (want YYYY-MM): " + s);
  YearMonth ym;
  ym.year = std::stoi(s.substr(0, 4));
  ym.month = std::stoi(s.substr(5, 2));
  if (ym.month < 1 || ym.month > 12) throw ConfigError("bad month value: " + s);
  return ym;
}

std::string format_month(const YearMonth& ym) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", ym.year, ym.month);
  return buf;
}

YearMonth next_month(YearMonth ym) {
  if (++ym.month > 12) {
    ym.month = 1;
    ++ym.year;
  }
  return ym;
}

int days_in_month(const YearMonth& ym) {
  static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int d = days[ym.month - 1];
  bool leap = (ym.year % 4 == 0 && ym.year % 100 != 0) || ym.year % 400 == 0;
  if (ym.month == 2 && leap) d = 29;
  return d;
}

bool before(const YearMonth& a, const YearMonth& b) {
  return a.year < b.year || (a.year == b.year && a.month < b.month);
}

}  // namespace

std::vector<std::string> months_in_window(const MonthWindow& window) {
  YearMonth start = parse_month(window.start);
  YearMonth end = parse_month(window.end);
  std::vector<std::string> months;
  for (YearMonth ym = start; before(ym, end); ym = next_month(ym)) {
    months.push_back(format_month(ym));
  }
  return months;
}

PageviewSeries fetch_pageviews(gateway::Gateway& gw, const gateway::ServiceEndpoint& endpoint,
                               const EntityRef& entity,
                               const std::optional<std::string>& article_title,
                               const MonthWindow& window) {
  if (!article_title || article_title->empty()) {
    throw NoArticleError("entity " + entity.id + " has no Wikipedia article");
  }
  std::vector<std::string> months = months_in_window(window);
  if (months.empty()) throw ConfigError("empty pageview window");

  // Wikimedia per-article path: …/{title}/monthly/{YYYYMMDD}/{YYYYMMDD}.
  YearMonth last = parse_month(months.back());
  char start_day[16];
  char end_day[16];
  YearMonth first = parse_month(months.front());
  std::snprintf(start_day, sizeof(start_day), "%04d%02d01", first.year, first.month);
  std::snprintf(end_day, sizeof(end_day), "%04d%02d%02d", last.year, last.month,
                days_in_month(last));

  gateway::HttpRequest http;
  http.method = "GET";
  http.url = endpoint.base_url + "/" + util::url_encode(*article_title) + "/monthly/" +
             start_day + "/" + end_day;

  gateway::HttpResponse response = gw.perform(endpoint, http);

  std::map<std::string, std::uint64_t> by_month;
  if (response.status == 200) {
    auto parsed = json::parse(response.body, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded() || !parsed.contains("items")) {
      throw MalformedError("pageview response lacks items for " + *article_title);
    }
    for (const json& item : parsed["items"]) {
      std::string ts = item.at("timestamp").get<std::string>();  // YYYYMMDDHH
      if (ts.size() < 6) continue;
      std::string month = ts.substr(0, 4) + "-" + ts.substr(4, 2);
      by_month[month] = item.at("views").get<std::uint64_t>();
    }
  } else if (response.status != 404) {
    // 404 means no data in the window; anything else is a real failure.
    throw TransportError("pageview API returned status " + std::to_string(response.status));
  }

  PageviewSeries series;
  series.entity = entity;
  series.article_title = *article_title;
  for (const std::string& month : months) {
    auto it = by_month.find(month);
    if (it == by_month.end()) {
      series.monthly_views.push_back({month, 0, /*missing=*/true});
    } else {
      series.monthly_views.push_back({month, it->second, /*missing=*/false});
    }
  }
  return series;
}

double compute_wpv(const PageviewSeries& series) {
  if (series.monthly_views.empty()) {
    throw EmptySeriesError("pageview series for " + series.entity.id + " is empty");
  }
  double sum = 0.0;
  for (const MonthCount& m : series.monthly_views) sum += static_cast<double>(m.views);
  return sum / static_cast<double>(series.monthly_views.size());
}

SampledLevels sample_entities(const std::vector<PopularityRecord>& candidates,
                              const SamplingPlan& plan) {
  std::map<LongTailLevel, std::vector<PopularityRecord>> pools;
  for (const PopularityRecord& record : candidates) pools[record.level].push_back(record);

  SampledLevels out;
  for (const auto& [level, target] : plan.targets) {
    if (target < 0) throw ConfigError("negative sampling target");
    auto pool = pools[level];
    // Per-level streams keep one level's draw independent of the others.
    util::Rng rng(util::derive_seed(plan.seed, "sample_entities", to_string(level)));
    auto picked = rng.sample_without_replacement(pool, static_cast<size_t>(target));
    if (static_cast<int>(picked.size()) < target) {
      out.shortfall[level] = target - static_cast<int>(picked.size());
    }
    out.per_level[level] = std::move(picked);
  }
  return out;
}

ReservoirSampler::ReservoirSampler(size_t capacity, std::uint64_t seed)
    : capacity_(capacity), rng_(util::derive_seed(seed, "reservoir")) {}

void ReservoirSampler::offer(EntityRef entity) {
  size_t index = seen_++;
  if (slots_.size() < capacity_) {
    slots_.emplace_back(index, std::move(entity));
    return;
  }
  if (capacity_ == 0) return;
  size_t j = static_cast<size_t>(rng_.below(index + 1));
  if (j < capacity_) slots_[j] = {index, std::move(entity)};
}

std::vector<EntityRef> ReservoirSampler::take() const {
  auto sorted = slots_;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<EntityRef> out;
  out.reserve(sorted.size());
  for (auto& [index, entity] : sorted) out.push_back(entity);
  return out;
}

}  // namespace ltkg::popularity
