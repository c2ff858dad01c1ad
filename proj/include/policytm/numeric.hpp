// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace policytm {

// Thread-safe natural log of the gamma function for positive arguments.
double log_gamma(double x);

// log(sum(exp(values))) without overflow. Returns -inf for an empty span.
double log_sum_exp(std::span<const double> values);

// Sum that does not depend on the order of the inputs: values are summed in
// ascending order. Used wherever a result must be invariant under relabeling.
double order_independent_sum(std::span<const double> values);

// SplitMix64 finalizer; a cheap bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

// 64-bit FNV-1a over a byte string.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

// Maps 64 random bits to a double uniform on [0, 1).
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace policytm
