// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/tuning/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "policytm/error.hpp"
#include "policytm/numeric.hpp"
#include "policytm/tuning/singular_values.hpp"

namespace policytm {

namespace {

double kl_term(double p, double q) {
  if (p == 0.0) return 0.0;
  if (q == 0.0) return std::numeric_limits<double>::infinity();
  return p * std::log(p / q);
}

void require_pairs(const Matrix& phi) {
  if (phi.rows() < 2) throw DomainError("metric undefined for K<2");
}

std::vector<double> normalized(std::vector<double> v) {
  const double total = order_independent_sum(v);
  if (!(total > 0.0)) throw DomainError("cannot normalize a zero vector");
  for (auto& x : v) x /= total;
  return v;
}

}  // namespace

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kGriffiths2004: return "griffiths2004";
    case Metric::kCaoJuan2009: return "caojuan2009";
    case Metric::kArun2010: return "arun2010";
    case Metric::kDeveaud2014: return "deveaud2014";
  }
  return "unknown";
}

std::string_view metric_label(Metric metric) {
  switch (metric) {
    case Metric::kGriffiths2004: return "Griffiths2004";
    case Metric::kCaoJuan2009: return "CaoJuan2009";
    case Metric::kArun2010: return "Arun2010";
    case Metric::kDeveaud2014: return "Deveaud2014";
  }
  return "Unknown";
}

Direction metric_direction(Metric metric) {
  switch (metric) {
    case Metric::kGriffiths2004:
    case Metric::kDeveaud2014:
      return Direction::kMaximize;
    case Metric::kCaoJuan2009:
    case Metric::kArun2010:
      return Direction::kMinimize;
  }
  return Direction::kMaximize;
}

std::string_view direction_name(Direction direction) {
  return direction == Direction::kMaximize ? "maximize" : "minimize";
}

Metric parse_metric(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); });
  if (s == "griffiths" || s == "griffiths2004") return Metric::kGriffiths2004;
  if (s == "cao" || s == "caojuan" || s == "caojuan2009") return Metric::kCaoJuan2009;
  if (s == "arun" || s == "arun2010") return Metric::kArun2010;
  if (s == "deveaud" || s == "deveaud2014") return Metric::kDeveaud2014;
  throw ConfigError("unknown metric '" + std::string(text) + "'");
}

std::vector<Metric> parse_metric_list(std::string_view comma_separated) {
  std::vector<Metric> metrics;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    const std::size_t comma = comma_separated.find(',', start);
    const auto item = comma_separated.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start);
    if (!item.empty()) {
      const Metric m = parse_metric(item);
      if (std::find(metrics.begin(), metrics.end(), m) == metrics.end()) metrics.push_back(m);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (metrics.empty()) throw ConfigError("no metrics selected");
  return metrics;
}

double metric_griffiths2004(std::span<const double> loglik_samples) {
  if (loglik_samples.empty()) throw DomainError("griffiths2004: no likelihood samples");
  std::vector<double> negated;
  negated.reserve(loglik_samples.size());
  for (double l : loglik_samples) {
    if (!std::isfinite(l)) throw DomainError("griffiths2004: non-finite likelihood sample");
    negated.push_back(-l);
  }
  const double peak = *std::max_element(loglik_samples.begin(), loglik_samples.end());
  const double low = *std::min_element(loglik_samples.begin(), loglik_samples.end());
  if (low == peak) return peak;
  const double value =
      std::log(static_cast<double>(loglik_samples.size())) - log_sum_exp(negated);
  return std::min(value, peak);
}

double metric_caojuan2009(const Matrix& phi) {
  require_pairs(phi);
  const std::size_t k = phi.rows();
  std::vector<double> norms(k);
  for (std::size_t i = 0; i < k; ++i) {
    double sq = 0.0;
    for (double x : phi.row(i)) sq += x * x;
    norms[i] = std::sqrt(sq);
    if (!(norms[i] > 0.0)) throw DomainError("caojuan2009: zero topic row");
  }
  std::vector<double> sims;
  sims.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      double dot = 0.0;
      const auto a = phi.row(i);
      const auto b = phi.row(j);
      for (std::size_t w = 0; w < phi.cols(); ++w) dot += a[w] * b[w];
      sims.push_back(std::clamp(dot / (norms[i] * norms[j]), 0.0, 1.0));
    }
  }
  return order_independent_sum(sims) / static_cast<double>(sims.size());
}

double symmetric_kl(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DomainError("symmetric_kl: length mismatch");
  double forward = 0.0, backward = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    forward += kl_term(p[i], q[i]);
    backward += kl_term(q[i], p[i]);
  }
  return forward + backward;
}

double metric_arun2010(const Matrix& phi, const Matrix& theta,
                       std::span<const std::uint32_t> doc_lengths) {
  const std::size_t k = phi.rows();
  if (k < 1) throw DomainError("arun2010: empty phi");
  if (theta.cols() != k) throw DomainError("arun2010: theta columns must equal phi rows");
  if (theta.rows() != doc_lengths.size()) {
    throw DomainError("arun2010: theta rows must equal the number of document lengths");
  }
  // Rows in a canonical order so rounding in the eigensolver cannot depend
  // on topic labels.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = phi.row(a), rb = phi.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  Matrix canonical(k, phi.cols());
  for (std::size_t i = 0; i < k; ++i) {
    std::copy(phi.row(order[i]).begin(), phi.row(order[i]).end(), canonical.row(i).begin());
  }
  auto c1 = normalized(singular_values(canonical));

  std::vector<double> mass(k, 0.0);
  for (std::size_t d = 0; d < theta.rows(); ++d) {
    if (doc_lengths[d] == 0) throw DomainError("arun2010: document lengths must be positive");
    for (std::size_t t = 0; t < k; ++t) mass[t] += doc_lengths[d] * theta(d, t);
  }
  auto c2 = normalized(std::move(mass));
  std::sort(c2.begin(), c2.end(), std::greater<>());

  std::vector<double> terms(k);
  for (std::size_t i = 0; i < k; ++i) terms[i] = kl_term(c1[i], c2[i]) + kl_term(c2[i], c1[i]);
  return std::max(0.0, order_independent_sum(terms));
}

double metric_deveaud2014(const Matrix& phi) {
  require_pairs(phi);
  for (double x : phi.data()) {
    if (!(x > 0.0)) {
      throw DomainError("deveaud2014: phi has a zero entry; pass the eta-smoothed estimate");
    }
  }
  const std::size_t k = phi.rows();
  std::vector<double> divs;
  divs.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      double forward = 0.0, backward = 0.0;
      const auto a = phi.row(i);
      const auto b = phi.row(j);
      for (std::size_t w = 0; w < phi.cols(); ++w) {
        forward += kl_term(a[w], b[w]);
        backward += kl_term(b[w], a[w]);
      }
      divs.push_back(0.5 * forward + 0.5 * backward);
    }
  }
  return std::max(0.0, order_independent_sum(divs) / static_cast<double>(divs.size()));
}

}  // namespace policytm
