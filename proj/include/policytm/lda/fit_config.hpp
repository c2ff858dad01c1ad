// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace policytm {

struct FitConfig {
  std::size_t num_topics = 2;
  // Symmetric document-topic concentration; unset means 50 / num_topics.
  std::optional<double> alpha;
  // Symmetric topic-word concentration.
  double eta = 0.1;
  std::size_t iterations = 2000;
  std::size_t burn_in = 500;
  std::size_t sample_lag = 10;
  std::uint64_t seed = 1;
  // Average phi/theta over retained samples instead of using the final
  // state. Topic labels can switch between samples, so this is opt-in.
  bool average_samples = false;

  double resolved_alpha() const {
    return alpha ? *alpha : 50.0 / static_cast<double>(num_topics);
  }

  // Throws ConfigError.
  void validate() const;
};

}  // namespace policytm
