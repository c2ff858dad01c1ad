// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/analysis/frequency.hpp"

#include <algorithm>

#include "policytm/error.hpp"

namespace policytm {

bool RowScope::contains(const DtmRow& row) const {
  if (sector && row.sector != *sector) return false;
  if (from || to) {
    if (!row.date) return false;
    if (from && *row.date < *from) return false;
    if (to && *row.date > *to) return false;
  }
  return true;
}

std::string RowScope::describe() const {
  std::string s = sector ? "sector=" + *sector : "sector=*";
  s += " from=" + (from ? format_iso_date(*from) : std::string("*"));
  s += " to=" + (to ? format_iso_date(*to) : std::string("*"));
  return s;
}

std::uint64_t FrequencyTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [term, count] : counts) sum += count;
  return sum;
}

std::vector<std::pair<std::string, std::uint64_t>> FrequencyTable::ranked(std::size_t top_n) const {
  std::vector<std::pair<std::string, std::uint64_t>> items(counts.begin(), counts.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (items.size() > top_n) items.resize(top_n);
  return items;
}

FrequencyTable term_frequencies(const DocumentTermMatrix& dtm, const RowScope& scope) {
  std::vector<std::size_t> rows;
  for (std::size_t d = 0; d < dtm.num_rows(); ++d) {
    if (scope.contains(dtm.row(d))) rows.push_back(d);
  }
  return term_frequencies(dtm, rows, scope.describe());
}

FrequencyTable term_frequencies(const DocumentTermMatrix& dtm, std::span<const std::size_t> rows,
                                std::string scope_label) {
  std::vector<std::uint64_t> sums(dtm.vocab_size(), 0);
  for (std::size_t d : rows) {
    for (const auto& tc : dtm.row(d).terms) sums[tc.term] += tc.count;
  }
  FrequencyTable table;
  table.scope = std::move(scope_label);
  for (TermId t = 0; t < sums.size(); ++t) {
    if (sums[t] > 0) table.counts.emplace(dtm.vocab().term(t), sums[t]);
  }
  return table;
}

std::set<std::string> high_frequency_terms(const FrequencyTable& table, std::uint64_t threshold) {
  if (threshold < 1) throw DomainError("high-frequency threshold must be >= 1");
  std::set<std::string> terms;
  for (const auto& [term, count] : table.counts) {
    if (count >= threshold) terms.insert(term);
  }
  return terms;
}

nlohmann::json frequencies_to_json(const FrequencyTable& table) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [term, count] : table.ranked(table.counts.size())) {
    counts.push_back({{"term", term}, {"count", count}});
  }
  return {{"format", "policytm.frequencies"}, {"version", 1}, {"scope", table.scope},
          {"total", table.total()}, {"counts", std::move(counts)}};
}

FrequencyTable frequencies_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "policytm.frequencies") throw FormatError("not a frequencies document");
    FrequencyTable t;
    t.scope = j.at("scope").get<std::string>();
    for (const auto& c : j.at("counts")) {
      t.counts.emplace(c.at("term").get<std::string>(), c.at("count").get<std::uint64_t>());
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed frequencies document: ") + e.what());
  }
}

std::string frequencies_to_tsv(const FrequencyTable& table) {
  std::string out = "# scope: " + table.scope + "\nterm\tcount\n";
  for (const auto& [term, count] : table.ranked(table.counts.size())) {
    out += term + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace policytm
