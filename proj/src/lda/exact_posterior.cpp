// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/lda/exact_posterior.hpp"

#include <cmath>
#include <string>

#include "policytm/error.hpp"
#include "policytm/lda/gibbs.hpp"
#include "policytm/numeric.hpp"

namespace policytm {

std::size_t ExactPosterior::index_of(std::span<const std::uint32_t> assignment) const {
  if (assignment.size() != num_tokens_) throw DomainError("assignment length mismatch");
  std::size_t index = 0;
  for (std::size_t i = num_tokens_; i-- > 0;) index = index * num_topics_ + assignment[i];
  return index;
}

std::vector<std::uint32_t> ExactPosterior::assignment(std::size_t state) const {
  std::vector<std::uint32_t> z(num_tokens_);
  for (std::size_t i = 0; i < num_tokens_; ++i) {
    z[i] = static_cast<std::uint32_t>(state % num_topics_);
    state /= num_topics_;
  }
  return z;
}

ExactPosterior exact_posterior(const DocumentTermMatrix& dtm, const FitConfig& config) {
  config.validate();
  const std::size_t kk = config.num_topics;
  const std::size_t vv = dtm.vocab_size();
  const double alpha = config.resolved_alpha();
  const double eta = config.eta;

  std::vector<TermId> words;
  std::vector<std::size_t> doc_of;
  for (std::size_t d = 0; d < dtm.num_rows(); ++d) {
    for (TermId w : expand_row(dtm.row(d))) {
      words.push_back(w);
      doc_of.push_back(d);
    }
  }
  const std::size_t n = words.size();
  double states_d = std::pow(static_cast<double>(kk), static_cast<double>(n));
  if (states_d > static_cast<double>(kMaxEnumeratedStates)) {
    throw DomainError("exact_posterior: K^N = " + std::to_string(kk) + "^" + std::to_string(n) +
                      " exceeds the enumeration limit of " +
                      std::to_string(kMaxEnumeratedStates));
  }
  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) states *= kk;

  const std::size_t num_docs = dtm.num_rows();
  const double lg_alpha = log_gamma(alpha);
  const double lg_k_alpha = log_gamma(static_cast<double>(kk) * alpha);
  std::vector<double> log_joint(states);
  std::vector<std::uint32_t> z(n, 0);
  std::vector<std::uint32_t> doc_topic(num_docs * kk), word_topic(vv * kk), topic_total(kk);
  for (std::size_t s = 0; s < states; ++s) {
    std::fill(doc_topic.begin(), doc_topic.end(), 0);
    std::fill(word_topic.begin(), word_topic.end(), 0);
    std::fill(topic_total.begin(), topic_total.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++doc_topic[doc_of[i] * kk + z[i]];
      ++word_topic[static_cast<std::size_t>(words[i]) * kk + z[i]];
      ++topic_total[z[i]];
    }
    double log_prior = 0.0;
    for (std::size_t d = 0; d < num_docs; ++d) {
      log_prior += lg_k_alpha - log_gamma(dtm.row(d).length + static_cast<double>(kk) * alpha);
      for (std::size_t k = 0; k < kk; ++k) {
        log_prior += log_gamma(doc_topic[d * kk + k] + alpha) - lg_alpha;
      }
    }
    log_joint[s] = log_prior + collapsed_log_likelihood(word_topic, topic_total, kk, vv, eta);

    // Odometer increment, token 0 fastest.
    for (std::size_t i = 0; i < n; ++i) {
      if (++z[i] < kk) break;
      z[i] = 0;
    }
  }
  const double log_norm = log_sum_exp(log_joint);
  std::vector<double> probs(states);
  for (std::size_t s = 0; s < states; ++s) probs[s] = std::exp(log_joint[s] - log_norm);
  return ExactPosterior(kk, n, std::move(probs));
}

}  // namespace policytm
