// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "policytm/corpus/dtm.hpp"

namespace policytm {

inline constexpr std::uint64_t kDefaultHighFrequencyThreshold = 50;

// Row filter by sector and inclusive date range. An empty scope keeps all rows.
struct RowScope {
  std::optional<std::string> sector;
  std::optional<Date> from;
  std::optional<Date> to;

  bool contains(const DtmRow& row) const;
  std::string describe() const;
};

struct FrequencyTable {
  std::map<std::string, std::uint64_t> counts;
  std::string scope;

  std::uint64_t total() const;
  // Terms by descending count, ties in lexicographic order.
  std::vector<std::pair<std::string, std::uint64_t>> ranked(std::size_t top_n) const;
};

FrequencyTable term_frequencies(const DocumentTermMatrix& dtm, const RowScope& scope = {});
FrequencyTable term_frequencies(const DocumentTermMatrix& dtm, std::span<const std::size_t> rows,
                                std::string scope_label);

// Terms whose count is at least `threshold`. Throws DomainError if threshold < 1.
std::set<std::string> high_frequency_terms(const FrequencyTable& table, std::uint64_t threshold);

nlohmann::json frequencies_to_json(const FrequencyTable& table);
FrequencyTable frequencies_from_json(const nlohmann::json& j);
std::string frequencies_to_tsv(const FrequencyTable& table);

}  // namespace policytm
