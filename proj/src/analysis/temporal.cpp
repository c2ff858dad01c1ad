// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/analysis/temporal.hpp"

#include <chrono>
#include <cstdio>
#include <map>

#include "policytm/error.hpp"

namespace policytm {

namespace {

using std::chrono::days;
using std::chrono::sys_days;

// Monday that starts the ISO week containing `date`.
sys_days iso_week_start(const Date& date) {
  const sys_days d{date};
  const unsigned iso_weekday = std::chrono::weekday{d}.iso_encoding();  // Monday = 1
  return d - days{iso_weekday - 1};
}

sys_days period_start(const Date& date, Period period) {
  if (period == Period::kMonth) return sys_days{date.year() / date.month() / std::chrono::day{1}};
  return iso_week_start(date);
}

}  // namespace

Period parse_period(std::string_view text) {
  if (text == "month") return Period::kMonth;
  if (text == "week") return Period::kWeek;
  throw ConfigError("unknown bucket period '" + std::string(text) + "' (use month or week)");
}

std::string_view period_name(Period period) { return period == Period::kMonth ? "month" : "week"; }

std::string period_label(const Date& date, Period period) {
  char buf[32];
  if (period == Period::kMonth) {
    std::snprintf(buf, sizeof(buf), "%04d-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()));
    return buf;
  }
  // The ISO week-year is the year of the week's Thursday.
  const sys_days thursday = iso_week_start(date) + days{3};
  const Date thursday_date{thursday};
  const sys_days jan1{thursday_date.year() / std::chrono::January / std::chrono::day{1}};
  const auto week = (thursday - jan1).count() / 7 + 1;
  std::snprintf(buf, sizeof(buf), "%04d-W%02d", static_cast<int>(thursday_date.year()),
                static_cast<int>(week));
  return buf;
}

std::vector<TemporalBucket> bucket_by_period(const DocumentTermMatrix& dtm, Period period) {
  std::map<sys_days, TemporalBucket> by_start;
  for (std::size_t d = 0; d < dtm.num_rows(); ++d) {
    const auto& row = dtm.row(d);
    if (!row.date) {
      throw ValidationError("row " + std::to_string(d) + " (" + row.source_id + ") has no date");
    }
    auto& bucket = by_start[period_start(*row.date, period)];
    if (bucket.label.empty()) bucket.label = period_label(*row.date, period);
    bucket.rows.push_back(d);
  }
  std::vector<TemporalBucket> buckets;
  buckets.reserve(by_start.size());
  for (auto& [start, bucket] : by_start) buckets.push_back(std::move(bucket));
  return buckets;
}

FrequencySeries frequency_series(const DocumentTermMatrix& dtm,
                                 const std::vector<TemporalBucket>& buckets,
                                 const std::set<std::string>& terms) {
  FrequencySeries series;
  std::vector<int> local(dtm.vocab_size(), -1);
  for (const auto& term : terms) {
    const auto id = dtm.vocab().find(term);
    if (!id) throw DomainError("term '" + term + "' is not in the vocabulary");
    local[*id] = static_cast<int>(series.terms.size());
    series.terms.push_back(term);
  }
  series.counts.assign(series.terms.size(), std::vector<std::uint64_t>(buckets.size(), 0));
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    series.periods.push_back(buckets[b].label);
    for (std::size_t d : buckets[b].rows) {
      for (const auto& tc : dtm.row(d).terms) {
        if (local[tc.term] >= 0) series.counts[local[tc.term]][b] += tc.count;
      }
    }
  }
  return series;
}

std::string frequency_series_to_tsv(const FrequencySeries& series) {
  std::string out = "term";
  for (const auto& p : series.periods) out += "\t" + p;
  out += "\n";
  for (std::size_t t = 0; t < series.terms.size(); ++t) {
    out += series.terms[t];
    for (auto c : series.counts[t]) out += "\t" + std::to_string(c);
    out += "\n";
  }
  return out;
}

nlohmann::json frequency_series_to_json(const FrequencySeries& series) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t t = 0; t < series.terms.size(); ++t) {
    rows.push_back({{"term", series.terms[t]}, {"counts", series.counts[t]}});
  }
  return {{"periods", series.periods}, {"terms", std::move(rows)}};
}

}  // namespace policytm
