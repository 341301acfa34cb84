#pragma once

#include <utility>
#include <vector>

#include "lrx/matrix.hpp"

namespace lrx {

// Thin SVD of an m x n matrix: a = u * diag(sigma) * vt with r = min(m, n),
// u m x r with orthonormal columns, vt r x n with orthonormal rows and sigma
// non-increasing. The sign convention makes the largest-magnitude entry of
// each u column non-negative, so factorizations are identical across runs.
struct SvdResult {
  Matrix u;
  std::vector<double> sigma;
  Matrix vt;
};

// One-sided Jacobi iteration. Caps at 100 sweeps with an off-diagonal target
// of 1e-12; raises NumericError with the sweep count if that is not reached.
SvdResult svd(const Matrix& a);

// Rank-k factors: first = u[:, :k] * diag(sigma[:k]), second = vt[:k, :].
// Their product is the best rank-k Frobenius approximation of the original.
std::pair<Matrix, Matrix> truncate(const SvdResult& s, std::size_t k);

}  // namespace lrx
