// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "../support/synthetic.hpp"
#include "policytm/error.hpp"
#include "policytm/lda/exact_posterior.hpp"
#include "policytm/lda/gibbs.hpp"
#include "policytm/lda/model.hpp"
#include "policytm/report/export.hpp"

namespace policytm {
namespace {

DocumentTermMatrix toy(std::vector<std::vector<std::string>> rows) {
  std::vector<SentenceDocument> docs;
  for (auto& r : rows) {
    SentenceDocument s;
    s.source_id = "t";
    s.index = docs.size();
    s.tokens = std::move(r);
    s.sector = "Health";
    docs.push_back(std::move(s));
  }
  return build_dtm(docs);
}

FitConfig config(std::size_t k, std::uint64_t seed = 1) {
  FitConfig c;
  c.num_topics = k;
  c.seed = seed;
  return c;
}

TEST(FitConfig, Validation) {
  FitConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_DOUBLE_EQ(c.resolved_alpha(), 25.0);
  c.num_topics = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = FitConfig{};
  c.burn_in = c.iterations;
  EXPECT_THROW(c.validate(), ConfigError);
  c = FitConfig{};
  c.eta = 0.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = FitConfig{};
  c.alpha = -1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = FitConfig{};
  c.sample_lag = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Conditional, SymmetricWhenEmpty) {
  const std::vector<std::uint32_t> zeros{0, 0};
  std::vector<double> out(2);
  topic_conditional(zeros, zeros, zeros, 0.5, 0.1, 3, out);
  EXPECT_DOUBLE_EQ(out[0], 0.5);
  EXPECT_DOUBLE_EQ(out[1], 0.5);
}

TEST(Conditional, HandEvaluatedExample) {
  const std::vector<std::uint32_t> ndk{2, 0}, nkw{1, 0}, nk{3, 1};
  std::vector<double> out(2);
  topic_conditional(ndk, nkw, nk, 1.0, 1.0, 2, out);
  // Independent evaluation of (n_dk + a)(n_kw + e) / (n_k + V e).
  const double u0 = (2 + 1.0) * (1 + 1.0) / (3 + 2.0);
  const double u1 = (0 + 1.0) * (0 + 1.0) / (1 + 2.0);
  EXPECT_NEAR(out[0], u0 / (u0 + u1), 1e-12);
  EXPECT_NEAR(out[1], u1 / (u0 + u1), 1e-12);
  EXPECT_NEAR(out[0], 0.7826, 5e-5);
  EXPECT_NEAR(out[1], 0.2174, 5e-5);
}

TEST(Conditional, SingleTopic) {
  const std::vector<std::uint32_t> one{4};
  std::vector<double> out(1);
  topic_conditional(one, one, one, 0.3, 0.1, 5, out);
  EXPECT_EQ(out[0], 1.0);
}

TEST(Gibbs, SingleTopicAssignsZero) {
  const auto dtm = toy({{"a", "b", "a"}, {"c"}});
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    GibbsState s(dtm, config(1, seed));
    for (auto z : s.assignments()) EXPECT_EQ(z, 0u);
    s.sweep();
    for (auto z : s.assignments()) EXPECT_EQ(z, 0u);
  }
}

TEST(Gibbs, InitConservesCounts) {
  const auto dtm = toy({{"a", "b"}, {"a", "c"}});
  GibbsState s(dtm, config(2));
  const auto totals = s.topic_totals();
  EXPECT_EQ(std::accumulate(totals.begin(), totals.end(), 0u), 4u);
  EXPECT_NO_THROW(s.check_invariants());
}

TEST(Gibbs, DeterministicForSeed) {
  const auto dtm = testing::random_dtm(50, 30, 12, 4);
  GibbsState a(dtm, config(4, 17)), b(dtm, config(4, 17)), c(dtm, config(4, 18));
  EXPECT_TRUE(std::ranges::equal(a.assignments(), b.assignments()));
  for (int i = 0; i < 25; ++i) {
    a.sweep();
    b.sweep();
    c.sweep();
  }
  EXPECT_TRUE(std::ranges::equal(a.assignments(), b.assignments()));
  EXPECT_FALSE(std::ranges::equal(a.assignments(), c.assignments()));
}

TEST(Gibbs, ConservationOverManySweeps) {
  const auto dtm = testing::random_dtm(120, 80, 16, 11);
  GibbsState s(dtm, config(6, 5));
  for (int i = 0; i < 100; ++i) {
    s.sweep();
    ASSERT_NO_THROW(s.check_invariants()) << "sweep " << i;
  }
}

TEST(Gibbs, FullConditionalNormalizedAndPositive) {
  const auto dtm = testing::random_dtm(30, 20, 10, 2);
  GibbsState s(dtm, config(5, 3));
  for (int i = 0; i < 5; ++i) s.sweep();
  for (std::size_t d = 0; d < s.num_docs(); ++d) {
    for (std::size_t i = 0; i < s.doc_length(d); ++i) {
      const auto p = s.full_conditional(d, i);
      double sum = 0.0;
      for (double x : p) {
        EXPECT_GT(x, 0.0);
        sum += x;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(LogLikelihood, ZeroCounts) {
  const std::vector<std::uint32_t> wt(6, 0), nk(3, 0);
  EXPECT_DOUBLE_EQ(collapsed_log_likelihood(wt, nk, 3, 2, 0.1), 0.0);
}

TEST(LogLikelihood, OneTokenTwoWords) {
  const std::vector<std::uint32_t> wt{1, 0}, nk{1};
  const double expected = std::lgamma(2.0) - 2 * std::lgamma(1.0) +
                          (std::lgamma(2.0) + std::lgamma(1.0) - std::lgamma(3.0));
  EXPECT_NEAR(collapsed_log_likelihood(wt, nk, 1, 2, 1.0), expected, 1e-12);
  EXPECT_NEAR(collapsed_log_likelihood(wt, nk, 1, 2, 1.0), -std::log(2.0), 1e-12);
}

TEST(LogLikelihood, InvariantUnderTopicRelabeling) {
  const auto dtm = testing::random_dtm(60, 25, 10, 8);
  GibbsState s(dtm, config(4, 2));
  for (int i = 0; i < 10; ++i) s.sweep();
  const std::size_t k = 4, v = s.vocab_size();
  std::vector<std::uint32_t> wt, nk(s.topic_totals().begin(), s.topic_totals().end());
  for (TermId w = 0; w < v; ++w) {
    const auto c = s.word_topic_counts(w);
    wt.insert(wt.end(), c.begin(), c.end());
  }
  const double base = collapsed_log_likelihood(wt, nk, k, v, 0.1);
  EXPECT_LE(base, 0.0);
  std::vector<std::size_t> perm{0, 1, 2, 3};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint32_t> pwt(wt.size()), pnk(k);
    for (std::size_t w = 0; w < v; ++w)
      for (std::size_t t = 0; t < k; ++t) pwt[w * k + perm[t]] = wt[w * k + t];
    for (std::size_t t = 0; t < k; ++t) pnk[perm[t]] = nk[t];
    EXPECT_EQ(collapsed_log_likelihood(pwt, pnk, k, v, 0.1), base);
  }
  EXPECT_EQ(s.joint_log_likelihood(), base);
}

TEST(Fit, PhiThetaStochastic) {
  const auto dtm = testing::random_dtm(40, 30, 12, 1);
  auto c = config(3);
  c.iterations = 50;
  c.burn_in = 10;
  const auto m = fit(dtm, c);
  ASSERT_EQ(m.phi.rows(), 3u);
  ASSERT_EQ(m.phi.cols(), dtm.vocab_size());
  ASSERT_EQ(m.theta.rows(), dtm.num_rows());
  for (std::size_t r = 0; r < m.phi.rows(); ++r) {
    double s = 0;
    for (double x : m.phi.row(r)) {
      EXPECT_GT(x, 0.0);
      s += x;
    }
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
  for (std::size_t r = 0; r < m.theta.rows(); ++r) {
    double s = 0;
    for (double x : m.theta.row(r)) {
      EXPECT_GT(x, 0.0);
      s += x;
    }
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
  EXPECT_EQ(m.loglik_trace.size(), 4u);
}

TEST(Fit, SingleTopicIsSmoothedUnigram) {
  const auto dtm = toy({{"a", "a", "b"}, {"c"}});
  auto c = config(1);
  c.iterations = 5;
  c.burn_in = 1;
  c.sample_lag = 1;
  const auto m = fit(dtm, c);
  const double eta = c.eta, denom = 4 + 3 * eta;
  EXPECT_NEAR(m.phi(0, 0), (2 + eta) / denom, 1e-15);
  EXPECT_NEAR(m.phi(0, 1), (1 + eta) / denom, 1e-15);
  EXPECT_NEAR(m.phi(0, 2), (1 + eta) / denom, 1e-15);
  for (std::size_t d = 0; d < m.theta.rows(); ++d) EXPECT_DOUBLE_EQ(m.theta(d, 0), 1.0);
}

TEST(Fit, SerializedModelIsDeterministic) {
  const auto dtm = testing::random_dtm(40, 30, 12, 1);
  auto c = config(3, 77);
  c.iterations = 60;
  c.burn_in = 20;
  const auto a = dump_json(model_to_json(fit(dtm, c), true));
  const auto b = dump_json(model_to_json(fit(dtm, c), true));
  EXPECT_EQ(a, b);
  c.seed = 78;
  EXPECT_NE(a, dump_json(model_to_json(fit(dtm, c), true)));
}

TEST(Fit, WarnsWhenTopicsExceedTokens) {
  const auto dtm = toy({{"a", "b"}});
  auto c = config(3);
  c.iterations = 3;
  c.burn_in = 1;
  c.sample_lag = 1;
  const auto m = fit(dtm, c);
  EXPECT_EQ(m.warnings.size(), 1u);
}

TEST(Fit, AveragingStaysStochastic) {
  const auto dtm = testing::random_dtm(40, 30, 12, 1);
  auto c = config(3);
  c.iterations = 40;
  c.burn_in = 10;
  c.average_samples = true;
  const auto m = fit(dtm, c);
  EXPECT_FALSE(m.warnings.empty());
  for (std::size_t r = 0; r < m.phi.rows(); ++r) {
    double s = 0;
    for (double x : m.phi.row(r)) s += x;
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
}

TEST(Fit, RecoversPlantedTopics) {
  testing::SyntheticSpec spec;
  spec.topics = 3;
  spec.vocab = 60;
  spec.docs = 200;
  spec.seed = 5;
  const auto corpus = testing::generate_corpus(spec);
  auto c = config(3, 9);
  c.alpha = 0.1;
  c.iterations = 300;
  c.burn_in = 100;
  const auto m = fit(corpus.dtm, c);
  EXPECT_GE(testing::matched_cosine(corpus.phi, m.phi, corpus.dtm.vocab()), 0.85);
}

TEST(ModelJson, RoundTripFullPrecision) {
  const auto dtm = testing::random_dtm(20, 15, 8, 3);
  auto c = config(2);
  c.iterations = 30;
  c.burn_in = 5;
  const auto m = fit(dtm, c);
  const auto back = model_from_json(nlohmann::json::parse(dump_json(model_to_json(m, true))));
  EXPECT_EQ(back.phi, m.phi);
  EXPECT_EQ(back.theta, m.theta);
  EXPECT_EQ(back.loglik_trace, m.loglik_trace);
  EXPECT_EQ(back.vocab, m.vocab);
  EXPECT_EQ(back.config.seed, m.config.seed);
  const auto slim = model_from_json(model_to_json(m, false));
  EXPECT_TRUE(slim.theta.empty());
  auto tampered = model_to_json(m, false);
  tampered["vocab"][0] = "zzz";
  EXPECT_THROW(model_from_json(tampered), FormatError);
}

TEST(ExactPosterior, OneTokenIsUniform) {
  const auto dtm = toy({{"a"}});
  auto c = config(2);
  c.alpha = 1.0;
  const auto post = exact_posterior(dtm, c);
  ASSERT_EQ(post.num_states(), 2u);
  EXPECT_NEAR(post.probability(0), 0.5, 1e-15);
  EXPECT_NEAR(post.probability(1), 0.5, 1e-15);
}

TEST(ExactPosterior, TwoIdenticalTokensByHand) {
  // alpha = eta = 1, V = 1: p(z) = G(2) / G(4) * n0! * n1!, p(w|z) = 1.
  const auto dtm = toy({{"a", "a"}});
  auto c = config(2);
  c.alpha = 1.0;
  c.eta = 1.0;
  const auto post = exact_posterior(dtm, c);
  auto log_prior = [](int n0, int n1) {
    return std::lgamma(2.0) - std::lgamma(4.0) + std::lgamma(n0 + 1.0) + std::lgamma(n1 + 1.0);
  };
  const double same = std::exp(log_prior(2, 0));
  const double split = std::exp(log_prior(1, 1));
  const double z = 2 * same + 2 * split;
  EXPECT_NEAR(post.probability(0), same / z, 1e-12);
  EXPECT_NEAR(post.probability(3), same / z, 1e-12);
  EXPECT_NEAR(post.probability(1), split / z, 1e-12);
  EXPECT_NEAR(post.probability(0) + post.probability(3), 2.0 / 3.0, 1e-12);
}

TEST(ExactPosterior, Normalized) {
  const auto dtm = toy({{"a", "b", "a"}, {"b", "c"}, {"c", "a"}});
  auto c = config(3);
  const auto post = exact_posterior(dtm, c);
  EXPECT_EQ(post.num_states(), 2187u);
  double s = 0;
  for (double p : post.probabilities()) s += p;
  EXPECT_NEAR(s, 1.0, 1e-12);
  const auto z = post.assignment(1234);
  EXPECT_EQ(post.index_of(z), 1234u);
}

TEST(ExactPosterior, RefusesLargeInstances) {
  const auto dtm = testing::random_dtm(5, 5, 10, 1);
  EXPECT_THROW(exact_posterior(dtm, config(10)), DomainError);
}

}  // namespace
}  // namespace policytm
