// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "policytm/corpus/dtm.hpp"
#include "policytm/lda/fit_config.hpp"

namespace policytm {

inline constexpr std::size_t kMaxEnumeratedStates = 1'000'000;

// Exact p(z | w) over every topic-assignment vector of a tiny corpus.
// Tokens are ordered as GibbsState visits them; state index
// sum_i z_i * K^i puts token 0 in the least significant digit.
class ExactPosterior {
 public:
  ExactPosterior(std::size_t num_topics, std::size_t num_tokens, std::vector<double> probabilities)
      : num_topics_(num_topics), num_tokens_(num_tokens), probabilities_(std::move(probabilities)) {}

  std::size_t num_topics() const { return num_topics_; }
  std::size_t num_tokens() const { return num_tokens_; }
  std::size_t num_states() const { return probabilities_.size(); }
  const std::vector<double>& probabilities() const { return probabilities_; }
  double probability(std::size_t state) const { return probabilities_.at(state); }

  std::size_t index_of(std::span<const std::uint32_t> assignment) const;
  std::vector<std::uint32_t> assignment(std::size_t state) const;

 private:
  std::size_t num_topics_;
  std::size_t num_tokens_;
  std::vector<double> probabilities_;
};

// Enumerates p(w | z) p(z) with both Dirichlet layers integrated out and
// normalizes. Throws DomainError when K^N exceeds kMaxEnumeratedStates.
ExactPosterior exact_posterior(const DocumentTermMatrix& dtm, const FitConfig& config);

}  // namespace policytm
