// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "policytm/lda/model.hpp"

namespace policytm {

struct TopicTerm {
  std::string term;
  double probability;
  bool operator==(const TopicTerm&) const = default;
};

// Ranked terms per topic, plus enough of the fit config to identify the run.
struct TopicReport {
  std::string sector;
  std::string period;  // empty unless the report covers one time bucket
  std::size_t num_topics = 0;
  std::vector<std::vector<TopicTerm>> topics;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double eta = 0.0;
  std::size_t iterations = 0;

  bool operator==(const TopicReport&) const = default;
};

// Top `top_n` terms of each topic by phi, equal probabilities ordered by term.
// Throws DomainError unless 1 <= top_n <= V.
TopicReport topic_table(const LdaModel& model, std::size_t top_n, std::string sector = {});

// "0.150": the three-decimal display used in the text tables.
std::string format_probability(double p);

// Tab-separated text table: a '#' header line with sector and run details,
// then "Topic 1<TAB>Prob. (β)<TAB>Topic 2..." and one row per rank.
std::string render_topic_table(const TopicReport& report);

nlohmann::json topic_report_to_json(const TopicReport& report);
TopicReport topic_report_from_json(const nlohmann::json& j);

}  // namespace policytm
