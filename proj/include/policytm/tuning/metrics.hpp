// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "policytm/matrix.hpp"

namespace policytm {

enum class Metric { kGriffiths2004, kCaoJuan2009, kArun2010, kDeveaud2014 };
enum class Direction { kMaximize, kMinimize };

inline constexpr Metric kAllMetrics[] = {Metric::kGriffiths2004, Metric::kCaoJuan2009,
                                         Metric::kArun2010, Metric::kDeveaud2014};

// "griffiths2004", "caojuan2009", "arun2010", "deveaud2014".
std::string_view metric_name(Metric metric);
// "Griffiths2004", "CaoJuan2009", ... as printed in tuning summaries.
std::string_view metric_label(Metric metric);
Direction metric_direction(Metric metric);
std::string_view direction_name(Direction direction);

// Accepts the canonical name, the label, or a short form such as "cao".
// Throws ConfigError for anything else.
Metric parse_metric(std::string_view text);
std::vector<Metric> parse_metric_list(std::string_view comma_separated);

// Log of the harmonic mean of the sample likelihoods,
// log S - logsumexp(-loglik). Maximized.
double metric_griffiths2004(std::span<const double> loglik_samples);

// Mean cosine similarity over unordered topic pairs. Minimized.
double metric_caojuan2009(const Matrix& phi);

// KL(C1 || C2) + KL(C2 || C1), where C1 are the normalized singular values of
// phi and C2 the normalized length-weighted topic mass of theta, both sorted
// descending. Minimized.
double metric_arun2010(const Matrix& phi, const Matrix& theta,
                       std::span<const std::uint32_t> doc_lengths);

// Mean over unordered topic pairs of the symmetrized KL divergence
// (KL(p||q) + KL(q||p)) / 2. Maximized. phi must be strictly positive.
double metric_deveaud2014(const Matrix& phi);

// KL(p || q) + KL(q || p) with 0 log 0 = 0.
double symmetric_kl(std::span<const double> p, std::span<const double> q);

}  // namespace policytm
