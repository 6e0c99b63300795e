#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "young/eigen.hpp"
#include "young/matrix.hpp"

namespace young {

/// Singular value decomposition m = left * diag(singular_values) * right*.
/// Right vectors are the eigenvectors of m*m (always a full unitary);
/// left columns are m*v/sigma on the support and zero below the rank
/// cutoff, so `left` is a partial isometry rather than a unitary.
struct Svd {
  std::vector<double> singular_values;  // length cols, sorted decreasing
  ComplexMatrix left;                   // rows x cols
  ComplexMatrix right;                  // cols x cols
};

/// Rank decision threshold: singular values at or below this count as zero.
inline double rank_cutoff(const Tolerance& tol, double sigma_max) {
  return std::max(tol.absolute, tol.relative * sigma_max);
}

inline Svd svd(const ComplexMatrix& m, const Tolerance& tol = {}) {
  const int rows = m.rows();
  const int cols = m.cols();
  ComplexMatrix h = hermitian_part(adjoint(m) * m);
  EigenDecomposition eig = hermitian_eigen(h);

  // sqrt of the Gram eigenvalues loses half the digits near zero, so the
  // singular values are recomputed as ||m v_k||, which is exact for exact
  // eigenvectors and keeps tiny singular values at roundoff size.
  std::vector<ComplexVector> images(cols);
  std::vector<double> sigma(cols);
  for (int k = 0; k < cols; ++k) {
    images[k] = mat_vec(m, column(eig.vectors, k));
    sigma[k] = vec_norm(images[k]);
  }

  std::vector<int> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&sigma](int i, int j) { return sigma[i] > sigma[j]; });

  Svd out;
  out.singular_values.resize(cols);
  out.left = ComplexMatrix(rows, cols);
  out.right = ComplexMatrix(cols, cols);
  const double cutoff = rank_cutoff(tol, sigma.empty() ? 0.0 : sigma[order[0]]);
  for (int k = 0; k < cols; ++k) {
    const int src = order[k];
    out.singular_values[k] = sigma[src];
    for (int i = 0; i < cols; ++i) out.right(i, k) = eig.vectors(i, src);
    if (sigma[src] <= cutoff) continue;  // leave the left column zero

    ComplexVector u = images[src];
    // Modified Gram-Schmidt against the accepted columns: the images of a
    // degenerate eigenvector cluster are only orthogonal to solver accuracy.
    for (int j = 0; j < k; ++j) {
      ComplexVector prev = column(out.left, j);
      const Complex proj = inner(prev, u);
      for (int i = 0; i < rows; ++i) u[i] -= proj * prev[i];
    }
    const double len = vec_norm(u);
    if (len == 0.0) continue;
    for (auto& entry : u) entry /= len;
    set_column(out.left, k, u);
  }
  return out;
}

/// Positive factor |m| = sqrt(m*m), rebuilt from the refined singular
/// values so that zero singular values stay at roundoff size.
inline ComplexMatrix matrix_abs(const ComplexMatrix& m, const Tolerance& tol = {}) {
  const Svd dec = svd(m, tol);
  return hermitian_part(dec.right * diag(dec.singular_values) * adjoint(dec.right));
}

/// y = isometry * positive_part with the isometry vanishing on ker |y|.
struct PolarParts {
  ComplexMatrix isometry;            // partial isometry nu
  ComplexMatrix positive_part;       // |y|
  ComplexMatrix range_projection;    // nu nu*, onto range of y
  ComplexMatrix support_projection;  // nu* nu, onto range of |y|
};

inline PolarParts polar(const ComplexMatrix& m, const Tolerance& tol = {}) {
  if (!m.square()) throw NotSquare("polar: matrix is not square");
  const Svd dec = svd(m, tol);
  PolarParts parts;
  parts.isometry = dec.left * adjoint(dec.right);
  parts.positive_part =
      hermitian_part(dec.right * diag(dec.singular_values) * adjoint(dec.right));
  parts.range_projection = hermitian_part(parts.isometry * adjoint(parts.isometry));
  parts.support_projection = hermitian_part(adjoint(parts.isometry) * parts.isometry);
  return parts;
}

/// Orthogonal projection onto the range of m (columns above the rank cutoff).
inline ComplexMatrix range_projection(const ComplexMatrix& m, const Tolerance& tol = {}) {
  if (!m.square()) throw NotSquare("range_projection: matrix is not square");
  const Svd dec = svd(m, tol);
  return hermitian_part(dec.left * adjoint(dec.left));
}

}  // namespace young
