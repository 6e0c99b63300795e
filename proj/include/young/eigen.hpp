#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "young/matrix.hpp"

namespace young {

/// Ordered spectrum of a Hermitian matrix: values decreasing, columns of
/// `vectors` are the matching orthonormal eigenvectors.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

namespace detail {

// Off-diagonal Frobenius mass sqrt(sum_{i != j} |a_ij|^2).
inline double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) sum += std::norm(a(i, j));
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace detail

// Convergence threshold for the cyclic Jacobi sweep, relative to ||m||_F.
inline constexpr double kJacobiConvergence = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi with unitary 2x2 rotations. `m` must be square and
/// Hermitian within `tol`; eigenvalues come out sorted decreasing.
inline EigenDecomposition hermitian_eigen(const ComplexMatrix& m,
                                          const Tolerance& tol = {},
                                          int max_sweeps = kJacobiMaxSweeps) {
  if (!m.square()) throw NotSquare("hermitian_eigen: matrix is not square");
  const double scale = frobenius_norm(m);
  if (hermitian_defect(m) > tol.scaled(scale)) {
    throw NotHermitian("hermitian_eigen: matrix is not Hermitian within tolerance");
  }

  const int n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = identity(n);

  const double threshold = kJacobiConvergence * scale;
  bool converged = detail::off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex beta = a(p, q);
        const double mag = std::abs(beta);
        if (mag == 0.0) continue;

        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const Complex phase = beta / mag;
        const double rho = (alpha - gamma) / (2.0 * mag);
        const double t = (rho >= 0.0 ? -1.0 : 1.0) / (std::abs(rho) + std::hypot(rho, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sigma = t * c;
        const Complex s = sigma * phase;

        // A <- R* A R with R the identity outside the (p, q) plane,
        // R(p,p) = c, R(p,q) = s, R(q,p) = -conj(s), R(q,q) = c.
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - std::conj(s) * aiq;
          a(i, q) = s * aip + c * aiq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        a(p, p) = c * c * alpha + sigma * sigma * gamma - 2.0 * c * sigma * mag;
        a(q, q) = sigma * sigma * alpha + c * c * gamma + 2.0 * c * sigma * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - std::conj(s) * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
    converged = detail::off_diagonal_norm(a) <= threshold;
  }

  if (!converged) {
    const double off = detail::off_diagonal_norm(a);
    throw NoConvergence("hermitian_eigen: sweep limit exceeded, off-diagonal residual " +
                            std::to_string(off),
                        off);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace young
