// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "policytm/corpus/dtm.hpp"

namespace policytm {

enum class Period { kMonth, kWeek };

// "month" or "week"; throws ConfigError otherwise.
Period parse_period(std::string_view text);
std::string_view period_name(Period period);

// Calendar label of the period containing `date`: "2020-01" for months,
// ISO 8601 "2020-W03" for weeks.
std::string period_label(const Date& date, Period period);

struct TemporalBucket {
  std::string label;
  std::vector<std::size_t> rows;  // DTM row indices, ascending
};

// Chronologically ordered, non-empty buckets. Throws ValidationError if a row
// carries no date.
std::vector<TemporalBucket> bucket_by_period(const DocumentTermMatrix& dtm, Period period);

// Counts of each term per bucket, for plotting term dynamics over time.
struct FrequencySeries {
  std::vector<std::string> periods;
  std::vector<std::string> terms;
  std::vector<std::vector<std::uint64_t>> counts;  // terms x periods
};

FrequencySeries frequency_series(const DocumentTermMatrix& dtm,
                                 const std::vector<TemporalBucket>& buckets,
                                 const std::set<std::string>& terms);

std::string frequency_series_to_tsv(const FrequencySeries& series);
nlohmann::json frequency_series_to_json(const FrequencySeries& series);

}  // namespace policytm
