// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/report/pipeline.hpp"

#include <algorithm>
#include <cctype>

#include "policytm/numeric.hpp"

namespace policytm {

std::string render_tuning_summary(const std::vector<SectorTuning>& sectors) {
  std::string out =
      "Sl. No.\tPolicy sectors\tApproximated number of topic models\tBenchmarking criteria\n";
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    std::string criteria;
    for (Metric m : sectors[i].tune.agreeing) {
      if (!criteria.empty()) criteria += "; ";
      criteria += metric_label(m);
    }
    out += std::to_string(i + 1) + "\t" + sectors[i].sector + "\t" +
           std::to_string(sectors[i].tune.recommended_k) + "\t" + criteria + "\n";
  }
  return out;
}

TemporalReport temporal_analysis(const DocumentTermMatrix& dtm, std::string sector,
                                 const TemporalOptions& options) {
  TemporalReport report;
  report.sector = std::move(sector);
  report.period = options.period;
  const auto buckets = bucket_by_period(dtm, options.period);

  for (const auto& bucket : buckets) {
    const DocumentTermMatrix sub = select_rows(dtm, bucket.rows);
    FitConfig config = options.fit;
    config.seed = mix64(options.fit.seed ^ fnv1a64(bucket.label));
    const LdaModel model = fit(sub, config);

    BucketReport b;
    b.label = bucket.label;
    b.rows = sub.num_rows();
    b.tokens = sub.total_tokens();
    b.topics = topic_table(model, std::min(options.top_n, sub.vocab_size()), report.sector);
    b.topics.period = bucket.label;
    b.warnings = model.warnings;
    b.top_terms = term_frequencies(sub).ranked(options.top_n);
    report.buckets.push_back(std::move(b));
  }

  std::set<std::string> series_terms;
  for (const auto& [term, count] : term_frequencies(dtm).ranked(options.series_terms)) {
    series_terms.insert(term);
  }
  report.series = frequency_series(dtm, buckets, series_terms);
  return report;
}

std::string render_temporal_topics(const TemporalReport& report) {
  std::string out;
  for (const auto& b : report.buckets) {
    out += render_topic_table(b.topics);
    out += "\n";
  }
  return out;
}

nlohmann::json temporal_report_to_json(const TemporalReport& report) {
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& b : report.buckets) {
    nlohmann::json top = nlohmann::json::array();
    for (const auto& [term, count] : b.top_terms) top.push_back({{"term", term}, {"count", count}});
    buckets.push_back({{"label", b.label},
                       {"rows", b.rows},
                       {"tokens", b.tokens},
                       {"topics", topic_report_to_json(b.topics)},
                       {"top_terms", std::move(top)},
                       {"warnings", b.warnings}});
  }
  return {{"format", "policytm.temporal"},
          {"version", 1},
          {"sector", report.sector},
          {"period", period_name(report.period)},
          {"buckets", std::move(buckets)},
          {"series", frequency_series_to_json(report.series)}};
}

std::string slugify(std::string_view label) {
  std::string out;
  bool pending = false;
  for (char c : label) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x80 && std::isalnum(u)) {
      if (pending && !out.empty()) out += '_';
      pending = false;
      out += static_cast<char>(std::tolower(u));
    } else {
      pending = true;
    }
  }
  return out.empty() ? "all" : out;
}

}  // namespace policytm
