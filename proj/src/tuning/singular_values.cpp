// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/tuning/singular_values.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "policytm/error.hpp"

namespace policytm {

namespace {

constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (double v : a.data()) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(Matrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("symmetric_eigenvalues: matrix is not square");
  const double scale = frobenius_norm(a);
  const double tolerance = kOffDiagonalTolerance * (scale > 0.0 ? scale : 1.0);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > tolerance; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that zeroes a(p, q).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> singular_values(const Matrix& m) {
  const std::size_t k = m.rows();
  const std::size_t v = m.cols();
  if (k > v) throw DomainError("singular_values: requires rows <= columns");
  for (double x : m.data()) {
    if (!std::isfinite(x)) throw DomainError("singular_values: non-finite entry");
  }
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      double dot = 0.0;
      const auto ri = m.row(i);
      const auto rj = m.row(j);
      for (std::size_t c = 0; c < v; ++c) dot += ri[c] * rj[c];
      gram(i, j) = dot;
      gram(j, i) = dot;
    }
  }
  auto eig = symmetric_eigenvalues(std::move(gram));
  for (auto& e : eig) e = std::sqrt(std::max(e, 0.0));
  return eig;
}

}  // namespace policytm
