// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "policytm/analysis/frequency.hpp"
#include "policytm/analysis/temporal.hpp"
#include "policytm/corpus/dtm.hpp"
#include "policytm/lda/model.hpp"
#include "policytm/report/topic_table.hpp"
#include "policytm/tuning/tune.hpp"

namespace policytm {

// One row of the per-sector tuning summary.
struct SectorTuning {
  std::string sector;
  std::size_t rows = 0;
  std::uint64_t tokens = 0;
  std::size_t vocab_size = 0;
  TuneReport tune;
};

// Tab-separated table: serial number, sector, recommended K, and the metrics
// that agreed on it ("CaoJuan2009; Griffiths2004").
std::string render_tuning_summary(const std::vector<SectorTuning>& sectors);

struct TemporalOptions {
  Period period = Period::kMonth;
  FitConfig fit;  // num_topics used for every bucket
  std::size_t top_n = 5;
  std::size_t series_terms = 20;
};

struct BucketReport {
  std::string label;
  std::size_t rows = 0;
  std::uint64_t tokens = 0;
  TopicReport topics;
  std::vector<std::pair<std::string, std::uint64_t>> top_terms;
  std::vector<std::string> warnings;
};

struct TemporalReport {
  std::string sector;
  Period period = Period::kMonth;
  std::vector<BucketReport> buckets;
  FrequencySeries series;
};

// Buckets the rows by period and fits one model per bucket. Each bucket's
// seed is derived from the base seed and the bucket label.
TemporalReport temporal_analysis(const DocumentTermMatrix& dtm, std::string sector,
                                 const TemporalOptions& options);

std::string render_temporal_topics(const TemporalReport& report);
nlohmann::json temporal_report_to_json(const TemporalReport& report);

// Lowercase ASCII with runs of other characters collapsed to '_'.
std::string slugify(std::string_view label);

}  // namespace policytm
