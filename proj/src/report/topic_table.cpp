// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/report/topic_table.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "policytm/error.hpp"

namespace policytm {

TopicReport topic_table(const LdaModel& model, std::size_t top_n, std::string sector) {
  const std::size_t v = model.vocab_size();
  if (top_n < 1 || top_n > v) {
    throw DomainError("top_n must be between 1 and the vocabulary size " + std::to_string(v));
  }
  TopicReport report;
  report.sector = std::move(sector);
  report.num_topics = model.num_topics();
  report.seed = model.config.seed;
  report.alpha = model.config.resolved_alpha();
  report.eta = model.config.eta;
  report.iterations = model.config.iterations;

  std::vector<std::size_t> order(v);
  for (std::size_t k = 0; k < model.num_topics(); ++k) {
    const auto row = model.phi.row(k);
    std::iota(order.begin(), order.end(), 0);
    // Vocabulary ids are in lexicographic order, so id breaks ties by term.
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top_n), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        return row[a] != row[b] ? row[a] > row[b] : model.vocab[a] < model.vocab[b];
                      });
    std::vector<TopicTerm> terms;
    terms.reserve(top_n);
    for (std::size_t i = 0; i < top_n; ++i) terms.push_back({model.vocab[order[i]], row[order[i]]});
    report.topics.push_back(std::move(terms));
  }
  return report;
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", p);
  return buf;
}

std::string render_topic_table(const TopicReport& report) {
  std::string out = "# sector: " + (report.sector.empty() ? std::string("(all)") : report.sector);
  if (!report.period.empty()) out += "\tperiod: " + report.period;
  char details[160];
  std::snprintf(details, sizeof(details), "\tK: %zu\tseed: %llu\talpha: %.6g\teta: %.6g\titerations: %zu\n",
                report.num_topics, static_cast<unsigned long long>(report.seed), report.alpha,
                report.eta, report.iterations);
  out += details;
  for (std::size_t k = 0; k < report.topics.size(); ++k) {
    if (k) out += "\t";
    out += "Topic " + std::to_string(k + 1) + "\tProb. (\xCE\xB2)";
  }
  out += "\n";
  const std::size_t ranks = report.topics.empty() ? 0 : report.topics.front().size();
  for (std::size_t r = 0; r < ranks; ++r) {
    for (std::size_t k = 0; k < report.topics.size(); ++k) {
      if (k) out += "\t";
      out += report.topics[k][r].term + "\t" + format_probability(report.topics[k][r].probability);
    }
    out += "\n";
  }
  return out;
}

nlohmann::json topic_report_to_json(const TopicReport& report) {
  nlohmann::json topics = nlohmann::json::array();
  for (const auto& terms : report.topics) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& term : terms) t.push_back({{"term", term.term}, {"probability", term.probability}});
    topics.push_back(std::move(t));
  }
  return {{"format", "policytm.topics"},
          {"version", 1},
          {"sector", report.sector},
          {"period", report.period},
          {"num_topics", report.num_topics},
          {"config", {{"seed", std::to_string(report.seed)},
                      {"alpha", report.alpha},
                      {"eta", report.eta},
                      {"iterations", report.iterations}}},
          {"topics", std::move(topics)}};
}

TopicReport topic_report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "policytm.topics") throw FormatError("not a topics document");
    TopicReport r;
    r.sector = j.at("sector").get<std::string>();
    r.period = j.at("period").get<std::string>();
    r.num_topics = j.at("num_topics").get<std::size_t>();
    const auto& c = j.at("config");
    r.seed = std::stoull(c.at("seed").get<std::string>());
    r.alpha = c.at("alpha").get<double>();
    r.eta = c.at("eta").get<double>();
    r.iterations = c.at("iterations").get<std::size_t>();
    for (const auto& jt : j.at("topics")) {
      std::vector<TopicTerm> terms;
      for (const auto& term : jt) {
        terms.push_back({term.at("term").get<std::string>(), term.at("probability").get<double>()});
      }
      r.topics.push_back(std::move(terms));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed topics document: ") + e.what());
  }
}

}  // namespace policytm
