// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "policytm/matrix.hpp"

namespace policytm {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, iterated until
// the off-diagonal Frobenius norm falls below 1e-12 of the matrix norm.
// Returned in descending order.
std::vector<double> symmetric_eigenvalues(Matrix a);

// Singular values of a K x V matrix with K <= V, as square roots of the
// eigenvalues of the K x K Gram matrix. Non-negative, descending.
// Throws DomainError on non-finite entries or K > V.
std::vector<double> singular_values(const Matrix& m);

}  // namespace policytm
