// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace policytm {

double log_gamma(double x) {
#if defined(__GLIBC__)
  // std::lgamma writes the global signgam; the reentrant variant does not.
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double peak = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(peak)) return peak;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - peak);
  return peak + std::log(acc);
}

double order_independent_sum(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double acc = 0.0;
  for (double v : sorted) acc += v;
  return acc;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace policytm
