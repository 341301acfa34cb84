#include "lrx/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lrx/error.hpp"

namespace lrx {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTarget = 1e-12;

// Column-major working storage so Jacobi rotations touch contiguous memory.
struct ColMat {
  std::size_t rows = 0, cols = 0;
  std::vector<double> data;  // column-major

  ColMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double* col(std::size_t j) { return data.data() + j * rows; }
  const double* col(std::size_t j) const { return data.data() + j * rows; }
};

ColMat to_columns(const Matrix& a) {
  ColMat b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b.col(j)[i] = a(i, j);
  return b;
}

double col_dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void rotate(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

// Orthogonalizes the columns of b in place, accumulating the applied
// rotations into v (n x n, starts as identity).
int jacobi_orthogonalize(ColMat& b, ColMat& v) {
  const std::size_t m = b.rows;
  const std::size_t n = b.cols;
  for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
    double worst = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* bp = b.col(p);
        double* bq = b.col(q);
        const double alpha = col_dot(bp, bp, m);
        const double beta = col_dot(bq, bq, m);
        const double gamma = col_dot(bp, bq, m);
        const double denom = std::sqrt(alpha * beta);
        if (denom == 0.0 || gamma == 0.0) continue;
        const double rel = std::abs(gamma) / denom;
        worst = std::max(worst, rel);
        if (rel <= kOffDiagTarget) continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate(bp, bq, m, c, s);
        rotate(v.col(p), v.col(q), v.rows, c, s);
      }
    }
    if (worst <= kOffDiagTarget) return sweep;
  }
  throw NumericError("svd did not converge after " +
                     std::to_string(kMaxSweeps) + " sweeps");
}

// Fills column j of u with a unit vector orthogonal to columns [0, j) using
// canonical basis vectors; used for the null-space directions of
// rank-deficient inputs.
void complete_column(Matrix& u, std::size_t j) {
  const std::size_t m = u.rows();
  std::vector<double> cand(m, 0.0);
  for (std::size_t e = 0; e < m; ++e) {
    std::fill(cand.begin(), cand.end(), 0.0);
    cand[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t l = 0; l < j; ++l) {
        double proj = 0.0;
        for (std::size_t i = 0; i < m; ++i) proj += cand[i] * u(i, l);
        for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * u(i, l);
      }
    }
    double norm = l2_norm(cand);
    if (norm > 0.5) {
      for (std::size_t i = 0; i < m; ++i) u(i, j) = cand[i] / norm;
      return;
    }
  }
  throw NumericError("svd basis completion failed");
}

SvdResult svd_tall(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ColMat b = to_columns(a);
  ColMat v(n, n);
  for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;

  jacobi_orthogonalize(b, v);

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = l2_norm(
      std::vector<double>(b.col(j), b.col(j) + m));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return norms[x] > norms[y];
  });

  SvdResult r;
  r.sigma.resize(n);
  r.u = Matrix(m, n);
  r.vt = Matrix(n, n);
  const double sigma_max = norms.empty() ? 0.0 : norms[order[0]];
  const double tiny = sigma_max * double(std::max(m, n)) * 1e-15;
  for (std::size_t jj = 0; jj < n; ++jj) {
    const std::size_t src = order[jj];
    const double s = norms[src];
    r.sigma[jj] = s;
    for (std::size_t i = 0; i < n; ++i) r.vt(jj, i) = v.col(src)[i];
    if (s > tiny && s > 0.0) {
      const double* bc = b.col(src);
      for (std::size_t i = 0; i < m; ++i) r.u(i, jj) = bc[i] / s;
    } else {
      complete_column(r.u, jj);
    }
  }

  // deterministic sign: largest-magnitude entry of each u column >= 0
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double mag = std::abs(r.u(i, j));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (r.u(arg, j) < 0.0) {
      for (std::size_t i = 0; i < m; ++i) r.u(i, j) = -r.u(i, j);
      for (std::size_t i = 0; i < n; ++i) r.vt(j, i) = -r.vt(j, i);
    }
  }
  return r;
}

}  // namespace

SvdResult svd(const Matrix& a) {
  if (a.empty()) throw ConfigError("svd of an empty matrix");
  if (a.rows() >= a.cols()) return svd_tall(a);
  // a = (svd of a^T) transposed back: u <- v', vt <- u'^T
  SvdResult t = svd_tall(transpose(a));
  SvdResult r;
  r.sigma = std::move(t.sigma);
  r.u = transpose(t.vt);
  r.vt = transpose(t.u);
  // re-apply the sign convention on the new u
  for (std::size_t j = 0; j < r.u.cols(); ++j) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < r.u.rows(); ++i) {
      const double mag = std::abs(r.u(i, j));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (r.u(arg, j) < 0.0) {
      for (std::size_t i = 0; i < r.u.rows(); ++i) r.u(i, j) = -r.u(i, j);
      for (std::size_t i = 0; i < r.vt.cols(); ++i) r.vt(j, i) = -r.vt(j, i);
    }
  }
  return r;
}

std::pair<Matrix, Matrix> truncate(const SvdResult& s, std::size_t k) {
  if (k < 1 || k > s.sigma.size()) {
    throw ConfigError("truncation rank " + std::to_string(k) +
                      " outside [1, " + std::to_string(s.sigma.size()) + "]");
  }
  Matrix wa(s.u.rows(), k);
  for (std::size_t i = 0; i < s.u.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) wa(i, j) = s.u(i, j) * s.sigma[j];
  Matrix wb(k, s.vt.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < s.vt.cols(); ++j) wb(i, j) = s.vt(i, j);
  return {std::move(wa), std::move(wb)};
}

}  // namespace lrx
