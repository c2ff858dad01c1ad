// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "policytm/corpus/dtm.hpp"
#include "policytm/matrix.hpp"

namespace policytm::testing {

struct SyntheticCorpus {
  Matrix phi;  // K x V, columns indexed by generator term id
  DocumentTermMatrix dtm;
};

struct SyntheticSpec {
  std::size_t topics = 5;
  std::size_t vocab = 200;
  std::size_t docs = 500;
  std::size_t doc_length = 20;
  double alpha = 0.1;
  double eta = 0.05;
  std::uint64_t seed = 1;
};

// Draws phi from Dirichlet(eta), theta_d from Dirichlet(alpha) and tokens
// from the resulting mixture. Term names are zero-padded so the sorted
// vocabulary preserves generator order.
SyntheticCorpus generate_corpus(const SyntheticSpec& spec);

// Greedy one-to-one matching on cosine similarity; returns the mean matched
// cosine. `estimate` columns follow the DTM vocabulary, which may omit
// generator terms that were never drawn.
double matched_cosine(const Matrix& truth, const Matrix& estimate, const Vocabulary& vocab);

// A DTM with random row lengths in [1, max_length] over `vocab` terms.
DocumentTermMatrix random_dtm(std::size_t rows, std::size_t vocab, std::size_t max_length,
                              std::uint64_t seed);

}  // namespace policytm::testing
