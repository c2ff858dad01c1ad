// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "policytm/corpus/dtm.hpp"
#include "policytm/lda/fit_config.hpp"
#include "policytm/matrix.hpp"

namespace policytm {

// A fitted topic model. phi holds the per-topic word probabilities reported
// in topic tables; theta the per-sentence topic proportions.
struct LdaModel {
  FitConfig config;  // alpha always resolved
  std::vector<std::string> vocab;
  std::uint64_t vocab_fingerprint = 0;
  Matrix phi;    // K x V
  Matrix theta;  // M x K, empty when loaded from a file written without it
  std::vector<std::uint32_t> doc_lengths;
  std::vector<double> loglik_trace;  // log p(w|z) at each retained sweep
  std::vector<std::string> warnings;

  std::size_t num_topics() const { return phi.rows(); }
  std::size_t vocab_size() const { return phi.cols(); }
};

// Runs config.iterations sweeps from a seeded random start. After burn_in,
// every sample_lag-th sweep contributes a log-likelihood sample.
LdaModel fit(const DocumentTermMatrix& dtm, const FitConfig& config);

inline constexpr int kModelFormatVersion = 1;

nlohmann::json model_to_json(const LdaModel& model, bool include_theta);
LdaModel model_from_json(const nlohmann::json& j);

nlohmann::json fit_config_to_json(const FitConfig& config);
FitConfig fit_config_from_json(const nlohmann::json& j);

}  // namespace policytm
