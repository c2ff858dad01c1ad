// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/lda/gibbs.hpp"

#include <cmath>
#include <string>

#include "policytm/error.hpp"
#include "policytm/numeric.hpp"

namespace policytm {

void FitConfig::validate() const {
  if (num_topics < 1) throw ConfigError("number of topics must be >= 1");
  const double a = resolved_alpha();
  if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("alpha must be > 0");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw ConfigError("eta must be > 0");
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (burn_in >= iterations) throw ConfigError("burn_in must be smaller than iterations");
  if (sample_lag < 1) throw ConfigError("sample_lag must be >= 1");
}

void topic_conditional(std::span<const std::uint32_t> doc_topic,
                       std::span<const std::uint32_t> word_topic,
                       std::span<const std::uint32_t> topic_totals, double alpha, double eta,
                       std::size_t vocab_size, std::span<double> out) {
  const std::size_t k_count = out.size();
  if (doc_topic.size() != k_count || word_topic.size() != k_count ||
      topic_totals.size() != k_count) {
    throw DomainError("topic_conditional: count vectors must all have K entries");
  }
  const double v_eta = static_cast<double>(vocab_size) * eta;
  double total = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    out[k] = (doc_topic[k] + alpha) * (word_topic[k] + eta) / (topic_totals[k] + v_eta);
    total += out[k];
  }
  for (auto& p : out) p /= total;
}

double collapsed_log_likelihood(std::span<const std::uint32_t> word_topic,
                                std::span<const std::uint32_t> topic_totals,
                                std::size_t num_topics, std::size_t vocab_size, double eta) {
  const double v_eta = static_cast<double>(vocab_size) * eta;
  const double lg_eta = log_gamma(eta);
  const double lg_v_eta = log_gamma(v_eta);
  std::vector<double> per_topic(num_topics, 0.0);
  // Zero counts contribute lnG(eta) - lnG(eta) = 0 and are skipped.
  for (std::size_t k = 0; k < num_topics; ++k) {
    double acc = 0.0;
    for (std::size_t w = 0; w < vocab_size; ++w) {
      const std::uint32_t n = word_topic[w * num_topics + k];
      if (n != 0) acc += log_gamma(n + eta) - lg_eta;
    }
    per_topic[k] = acc + lg_v_eta - log_gamma(topic_totals[k] + v_eta);
  }
  return order_independent_sum(per_topic);
}

std::vector<TermId> expand_row(const DtmRow& row) {
  std::vector<TermId> tokens;
  tokens.reserve(row.length);
  for (const auto& tc : row.terms) tokens.insert(tokens.end(), tc.count, tc.term);
  return tokens;
}

GibbsState::GibbsState(const DocumentTermMatrix& dtm, const FitConfig& config)
    : num_topics_(config.num_topics),
      vocab_size_(dtm.vocab_size()),
      alpha_(config.resolved_alpha()),
      eta_(config.eta),
      rng_(config.seed) {
  config.validate();
  doc_offsets_.reserve(dtm.num_rows() + 1);
  doc_offsets_.push_back(0);
  words_.reserve(dtm.total_tokens());
  for (const auto& row : dtm.rows()) {
    for (const auto& tc : row.terms) words_.insert(words_.end(), tc.count, tc.term);
    doc_offsets_.push_back(words_.size());
  }
  topics_.resize(words_.size());
  doc_topic_.assign(num_docs() * num_topics_, 0);
  word_topic_.assign(vocab_size_ * num_topics_, 0);
  topic_total_.assign(num_topics_, 0);
  scratch_.resize(num_topics_);

  for (std::size_t d = 0; d < num_docs(); ++d) {
    for (std::size_t t = doc_offsets_[d]; t < doc_offsets_[d + 1]; ++t) {
      std::uint32_t k = 0;
      if (num_topics_ > 1) {
        k = static_cast<std::uint32_t>(unit_interval(rng_()) * static_cast<double>(num_topics_));
      }
      topics_[t] = k;
      ++doc_topic_[d * num_topics_ + k];
      ++word_topic_[static_cast<std::size_t>(words_[t]) * num_topics_ + k];
      ++topic_total_[k];
    }
  }
  const double v_eta = static_cast<double>(vocab_size_) * eta_;
  inv_denominator_.resize(num_topics_);
  for (std::size_t k = 0; k < num_topics_; ++k) inv_denominator_[k] = 1.0 / (topic_total_[k] + v_eta);
}

std::vector<double> GibbsState::full_conditional(std::size_t doc, std::size_t position) const {
  if (doc >= num_docs() || position >= doc_length(doc)) {
    throw DomainError("full_conditional: token index out of range");
  }
  const std::size_t t = doc_offsets_[doc] + position;
  const std::uint32_t own = topics_[t];
  std::vector<std::uint32_t> dk(doc_topic_counts(doc).begin(), doc_topic_counts(doc).end());
  std::vector<std::uint32_t> wk(word_topic_counts(words_[t]).begin(),
                                word_topic_counts(words_[t]).end());
  std::vector<std::uint32_t> nk(topic_total_);
  --dk[own];
  --wk[own];
  --nk[own];
  std::vector<double> out(num_topics_);
  topic_conditional(dk, wk, nk, alpha_, eta_, vocab_size_, out);
  return out;
}

void GibbsState::sweep() {
  const std::size_t kk = num_topics_;
  if (kk == 1) return;  // A single topic admits exactly one assignment.
  const double v_eta = static_cast<double>(vocab_size_) * eta_;
  double* cumulative = scratch_.data();
  for (std::size_t d = 0; d < num_docs(); ++d) {
    std::uint32_t* dk = doc_topic_.data() + d * kk;
    for (std::size_t t = doc_offsets_[d]; t < doc_offsets_[d + 1]; ++t) {
      std::uint32_t* wk = word_topic_.data() + static_cast<std::size_t>(words_[t]) * kk;
      const std::uint32_t old = topics_[t];
      --dk[old];
      --wk[old];
      --topic_total_[old];
      inv_denominator_[old] = 1.0 / (topic_total_[old] + v_eta);

      double total = 0.0;
      for (std::size_t k = 0; k < kk; ++k) {
        total += (dk[k] + alpha_) * (wk[k] + eta_) * inv_denominator_[k];
        cumulative[k] = total;
      }
      const double u = unit_interval(rng_()) * total;
      std::uint32_t chosen = 0;
      while (chosen + 1 < kk && cumulative[chosen] <= u) ++chosen;

      topics_[t] = chosen;
      ++dk[chosen];
      ++wk[chosen];
      ++topic_total_[chosen];
      inv_denominator_[chosen] = 1.0 / (topic_total_[chosen] + v_eta);
    }
  }
}

double GibbsState::joint_log_likelihood() const {
  return collapsed_log_likelihood(word_topic_, topic_total_, num_topics_, vocab_size_, eta_);
}

void GibbsState::check_invariants() const {
  std::vector<std::uint32_t> dk(doc_topic_.size(), 0), wk(word_topic_.size(), 0),
      nk(num_topics_, 0);
  for (std::size_t d = 0; d < num_docs(); ++d) {
    for (std::size_t t = doc_offsets_[d]; t < doc_offsets_[d + 1]; ++t) {
      const std::uint32_t k = topics_[t];
      if (k >= num_topics_) throw Error("assignment out of range at token " + std::to_string(t));
      ++dk[d * num_topics_ + k];
      ++wk[static_cast<std::size_t>(words_[t]) * num_topics_ + k];
      ++nk[k];
    }
  }
  if (dk != doc_topic_) throw Error("document-topic counts disagree with assignments");
  if (wk != word_topic_) throw Error("word-topic counts disagree with assignments");
  if (nk != topic_total_) throw Error("topic totals disagree with assignments");
  for (std::size_t d = 0; d < num_docs(); ++d) {
    std::size_t sum = 0;
    for (auto c : doc_topic_counts(d)) sum += c;
    if (sum != doc_length(d)) throw Error("document " + std::to_string(d) + " length mismatch");
  }
  for (std::size_t k = 0; k < num_topics_; ++k) {
    std::size_t sum = 0;
    for (std::size_t w = 0; w < vocab_size_; ++w) sum += word_topic_[w * num_topics_ + k];
    if (sum != topic_total_[k]) throw Error("topic " + std::to_string(k) + " total mismatch");
  }
}

Matrix GibbsState::phi() const {
  Matrix phi(num_topics_, vocab_size_);
  const double v_eta = static_cast<double>(vocab_size_) * eta_;
  for (std::size_t k = 0; k < num_topics_; ++k) {
    const double denom = topic_total_[k] + v_eta;
    for (std::size_t w = 0; w < vocab_size_; ++w) {
      phi(k, w) = (word_topic_[w * num_topics_ + k] + eta_) / denom;
    }
  }
  return phi;
}

Matrix GibbsState::theta() const {
  Matrix theta(num_docs(), num_topics_);
  const double k_alpha = static_cast<double>(num_topics_) * alpha_;
  for (std::size_t d = 0; d < num_docs(); ++d) {
    const double denom = doc_length(d) + k_alpha;
    for (std::size_t k = 0; k < num_topics_; ++k) {
      theta(d, k) = (doc_topic_[d * num_topics_ + k] + alpha_) / denom;
    }
  }
  return theta;
}

}  // namespace policytm
