// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/lda/model.hpp"

#include <cstdio>

#include "policytm/error.hpp"
#include "policytm/lda/gibbs.hpp"

namespace policytm {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  return Matrix::from_rows(j.get<std::vector<std::vector<double>>>());
}

}  // namespace

LdaModel fit(const DocumentTermMatrix& dtm, const FitConfig& config) {
  config.validate();
  if (dtm.num_rows() == 0 || dtm.total_tokens() == 0) {
    throw ValidationError("cannot fit a model to an empty document-term matrix");
  }
  LdaModel model;
  model.config = config;
  model.config.alpha = config.resolved_alpha();
  model.vocab = dtm.vocab().terms();
  model.vocab_fingerprint = dtm.vocab().fingerprint();
  model.doc_lengths = dtm.doc_lengths();
  if (config.num_topics > dtm.total_tokens()) {
    model.warnings.push_back("K=" + std::to_string(config.num_topics) + " exceeds the " +
                             std::to_string(dtm.total_tokens()) + " tokens in the corpus");
  }
  if (config.average_samples) {
    model.warnings.push_back(
        "averaging phi/theta over samples; topic labels may switch between samples");
  }

  GibbsState state(dtm, config);
  Matrix phi_sum, theta_sum;
  std::size_t averaged = 0;
  for (std::size_t sweep = 1; sweep <= config.iterations; ++sweep) {
    state.sweep();
    if (sweep > config.burn_in && (sweep - config.burn_in) % config.sample_lag == 0) {
      model.loglik_trace.push_back(state.joint_log_likelihood());
      if (config.average_samples) {
        Matrix phi = state.phi(), theta = state.theta();
        if (averaged == 0) {
          phi_sum = std::move(phi);
          theta_sum = std::move(theta);
        } else {
          for (std::size_t r = 0; r < phi.rows(); ++r)
            for (std::size_t c = 0; c < phi.cols(); ++c) phi_sum(r, c) += phi(r, c);
          for (std::size_t r = 0; r < theta.rows(); ++r)
            for (std::size_t c = 0; c < theta.cols(); ++c) theta_sum(r, c) += theta(r, c);
        }
        ++averaged;
      }
    }
  }
  if (config.average_samples && averaged > 0) {
    const double inv = 1.0 / static_cast<double>(averaged);
    for (std::size_t r = 0; r < phi_sum.rows(); ++r)
      for (std::size_t c = 0; c < phi_sum.cols(); ++c) phi_sum(r, c) *= inv;
    for (std::size_t r = 0; r < theta_sum.rows(); ++r)
      for (std::size_t c = 0; c < theta_sum.cols(); ++c) theta_sum(r, c) *= inv;
    model.phi = std::move(phi_sum);
    model.theta = std::move(theta_sum);
  } else {
    model.phi = state.phi();
    model.theta = state.theta();
  }
  return model;
}

nlohmann::json fit_config_to_json(const FitConfig& config) {
  return {
      {"num_topics", config.num_topics},
      {"alpha", config.resolved_alpha()},
      {"eta", config.eta},
      {"iterations", config.iterations},
      {"burn_in", config.burn_in},
      {"sample_lag", config.sample_lag},
      // Seeds are full 64-bit values; keep them exact as strings.
      {"seed", std::to_string(config.seed)},
      {"average_samples", config.average_samples},
  };
}

FitConfig fit_config_from_json(const nlohmann::json& j) {
  FitConfig c;
  c.num_topics = j.at("num_topics").get<std::size_t>();
  c.alpha = j.at("alpha").get<double>();
  c.eta = j.at("eta").get<double>();
  c.iterations = j.at("iterations").get<std::size_t>();
  c.burn_in = j.at("burn_in").get<std::size_t>();
  c.sample_lag = j.at("sample_lag").get<std::size_t>();
  c.seed = std::stoull(j.at("seed").get<std::string>());
  c.average_samples = j.value("average_samples", false);
  return c;
}

nlohmann::json model_to_json(const LdaModel& model, bool include_theta) {
  nlohmann::json j = {
      {"format", "policytm.model"},
      {"version", kModelFormatVersion},
      {"config", fit_config_to_json(model.config)},
      {"seed", std::to_string(model.config.seed)},
      {"vocab_hash", hex64(model.vocab_fingerprint)},
      {"vocab", model.vocab},
      {"phi", matrix_to_json(model.phi)},
      {"loglik_trace", model.loglik_trace},
      {"doc_lengths", model.doc_lengths},
  };
  if (include_theta && !model.theta.empty()) j["theta"] = matrix_to_json(model.theta);
  return j;
}

LdaModel model_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "policytm.model") throw FormatError("not a policytm.model document");
    if (j.at("version").get<int>() != kModelFormatVersion) {
      throw FormatError("unsupported model version " + j.at("version").dump());
    }
    LdaModel m;
    m.config = fit_config_from_json(j.at("config"));
    m.vocab = j.at("vocab").get<std::vector<std::string>>();
    m.vocab_fingerprint = Vocabulary(m.vocab).fingerprint();
    if (hex64(m.vocab_fingerprint) != j.at("vocab_hash").get<std::string>()) {
      throw FormatError("model vocabulary does not match its hash");
    }
    m.phi = matrix_from_json(j.at("phi"));
    if (m.phi.rows() != m.config.num_topics || m.phi.cols() != m.vocab.size()) {
      throw FormatError("phi dimensions disagree with config and vocabulary");
    }
    m.loglik_trace = j.at("loglik_trace").get<std::vector<double>>();
    m.doc_lengths = j.at("doc_lengths").get<std::vector<std::uint32_t>>();
    if (j.contains("theta")) {
      m.theta = matrix_from_json(j.at("theta"));
      if (m.theta.cols() != m.config.num_topics || m.theta.rows() != m.doc_lengths.size()) {
        throw FormatError("theta dimensions disagree with config and document count");
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed model document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed model document: ") + e.what());
  }
}

}  // namespace policytm
