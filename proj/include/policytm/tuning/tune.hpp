// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "policytm/corpus/dtm.hpp"
#include "policytm/lda/fit_config.hpp"
#include "policytm/tuning/metrics.hpp"

namespace policytm {

struct MetricCurve {
  Metric metric;
  Direction direction;
  std::vector<std::pair<std::size_t, double>> points;  // strictly increasing K

  // Extremal K in the curve's direction; ties go to the smaller K.
  std::size_t best_k() const;
};

struct Selection {
  std::size_t k = 0;
  std::vector<Metric> agreeing;  // metrics whose extremum is k
};

struct TuneReport {
  std::vector<MetricCurve> curves;
  std::vector<std::pair<Metric, std::size_t>> per_metric_best;
  std::size_t recommended_k = 0;
  std::vector<Metric> agreeing;
  std::vector<std::pair<std::size_t, std::uint64_t>> seeds;  // K -> fit seed
};

struct KRange {
  std::size_t min;
  std::size_t max;
};

struct TuneOptions {
  // Concurrent fits; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// Seed of the fit for `k`, independent of the order in which K values run.
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t k);

// Majority vote over each curve's extremal K; ties go to the smaller K.
Selection select_k(std::span<const MetricCurve> curves);

// Fits one model per K in `range` using `base` as the template (its alpha,
// if unset, resolves per K) and evaluates the requested metrics.
TuneReport tune(const DocumentTermMatrix& dtm, KRange range, std::span<const Metric> metrics,
                const FitConfig& base, const TuneOptions& options = {});

inline constexpr int kTuneFormatVersion = 1;

nlohmann::json tune_report_to_json(const TuneReport& report);
TuneReport tune_report_from_json(const nlohmann::json& j);

// One "metric<TAB>K<TAB>value<TAB>direction" row per curve point, with header.
std::string curves_to_tsv(std::span<const MetricCurve> curves);

}  // namespace policytm
