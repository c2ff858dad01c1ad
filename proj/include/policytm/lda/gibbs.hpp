// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "policytm/corpus/dtm.hpp"
#include "policytm/lda/fit_config.hpp"
#include "policytm/matrix.hpp"

namespace policytm {

// Collapsed conditional p(z = k | rest) for one token of word w in document
// d, given counts that already exclude the token:
//
//   p(k) ~ (n_dk + alpha) * (n_wk + eta) / (n_k + V * eta)
//
// Writes the normalized distribution into `out` (size K).
void topic_conditional(std::span<const std::uint32_t> doc_topic,
                       std::span<const std::uint32_t> word_topic,
                       std::span<const std::uint32_t> topic_totals, double alpha, double eta,
                       std::size_t vocab_size, std::span<double> out);

// log p(w | z) with the topic-word distributions integrated out:
//
//   sum_k [ lnG(V eta) - V lnG(eta) + sum_w lnG(n_kw + eta) - lnG(n_k + V eta) ]
//
// `word_topic` is V x K row-major. Topic terms are summed in an
// order-independent way, so relabeling topics leaves the value bit-identical.
double collapsed_log_likelihood(std::span<const std::uint32_t> word_topic,
                                std::span<const std::uint32_t> topic_totals,
                                std::size_t num_topics, std::size_t vocab_size, double eta);

// Tokens of a row in the fixed visit order: ascending term id, each term
// repeated by its count.
std::vector<TermId> expand_row(const DtmRow& row);

// Topic assignments and count matrices of a collapsed Gibbs chain.
class GibbsState {
 public:
  // Assigns every token a topic uniformly at random from the seeded engine.
  GibbsState(const DocumentTermMatrix& dtm, const FitConfig& config);

  std::size_t num_topics() const { return num_topics_; }
  std::size_t vocab_size() const { return vocab_size_; }
  std::size_t num_docs() const { return doc_offsets_.size() - 1; }
  std::size_t num_tokens() const { return words_.size(); }
  double alpha() const { return alpha_; }
  double eta() const { return eta_; }

  std::span<const std::uint32_t> assignments() const { return topics_; }
  std::span<const TermId> words() const { return words_; }
  std::size_t doc_begin(std::size_t d) const { return doc_offsets_[d]; }
  std::size_t doc_length(std::size_t d) const { return doc_offsets_[d + 1] - doc_offsets_[d]; }

  std::span<const std::uint32_t> doc_topic_counts(std::size_t d) const {
    return {doc_topic_.data() + d * num_topics_, num_topics_};
  }
  std::span<const std::uint32_t> word_topic_counts(TermId w) const {
    return {word_topic_.data() + static_cast<std::size_t>(w) * num_topics_, num_topics_};
  }
  std::span<const std::uint32_t> topic_totals() const { return topic_total_; }

  // Conditional distribution of token `position` of document `doc`, computed
  // with that token's own assignment excluded from the counts.
  std::vector<double> full_conditional(std::size_t doc, std::size_t position) const;

  // Resamples every token once, documents in order and tokens in row order.
  void sweep();

  double joint_log_likelihood() const;

  // Throws Error if any count disagrees with the assignments.
  void check_invariants() const;

  // phi[k][w] = (n_kw + eta) / (n_k + V eta)
  Matrix phi() const;
  // theta[d][k] = (n_dk + alpha) / (N_d + K alpha)
  Matrix theta() const;

 private:
  std::size_t num_topics_;
  std::size_t vocab_size_;
  double alpha_;
  double eta_;
  std::vector<std::size_t> doc_offsets_;
  std::vector<TermId> words_;
  std::vector<std::uint32_t> topics_;
  std::vector<std::uint32_t> doc_topic_;   // D x K
  std::vector<std::uint32_t> word_topic_;  // V x K
  std::vector<std::uint32_t> topic_total_;
  std::vector<double> inv_denominator_;    // 1 / (n_k + V eta)
  std::vector<double> scratch_;
  std::mt19937_64 rng_;
};

}  // namespace policytm
