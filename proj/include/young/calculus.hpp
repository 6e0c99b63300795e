#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "young/eigen.hpp"
#include "young/matrix.hpp"

namespace young {

/// PSD test result: verdict plus the minimum eigenvalue as witness.
struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

inline PsdVerdict is_psd(const ComplexMatrix& m, const Tolerance& tol = {}) {
  const EigenDecomposition eig = hermitian_eigen(m, tol);
  const int n = m.rows();
  const double low = eig.values[n - 1];
  const double op_norm = std::max(std::abs(eig.values[0]), std::abs(low));
  return PsdVerdict{low >= -tol.scaled(op_norm), low};
}

/// Spectral power m^exponent for Hermitian PSD m: eigenvalues in
/// (-cutoff, 0) are rounding noise and get clamped to zero, anything
/// below -cutoff is a genuine negative direction and is rejected.
inline ComplexMatrix psd_power(const ComplexMatrix& m, double exponent,
                               const Tolerance& tol = {}) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw BadExponent("psd_power: exponent must be positive, got " +
                      std::to_string(exponent));
  }
  const EigenDecomposition eig = hermitian_eigen(m, tol);
  const int n = m.rows();
  const double op_norm =
      std::max(std::abs(eig.values[0]), std::abs(eig.values[n - 1]));
  const double cutoff = tol.scaled(op_norm);
  if (eig.values[n - 1] < -cutoff) {
    throw NotPsd("psd_power: eigenvalue " + std::to_string(eig.values[n - 1]) +
                     " below -" + std::to_string(cutoff),
                 eig.values[n - 1]);
  }
  std::vector<double> powered(n);
  for (int k = 0; k < n; ++k) {
    powered[k] = eig.values[k] <= 0.0 ? 0.0 : std::pow(eig.values[k], exponent);
  }
  return hermitian_part(eig.vectors * diag(powered) * adjoint(eig.vectors));
}

}  // namespace young
