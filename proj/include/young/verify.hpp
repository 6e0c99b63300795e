#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "young/calculus.hpp"
#include "young/decompositions.hpp"
#include "young/norms.hpp"

namespace young {

// Equality verdict thresholds, deliberately looser than solver accuracy:
// t^{1/p} amplifies eigenvalue rounding for small eigenvalues when p is
// close to 1, so spectra get 1e-7 relative and matrix residuals 1e-6.
inline constexpr double kSpectraEqualityRel = 1e-7;
inline constexpr double kMatrixEqualityRel = 1e-6;
// Flag tolerance for the equality <-> eigenvector detectors: structured
// cases land at solver accuracy (~1e-14 relative) and generic random
// cases at O(1), so 1e-7 splits the two populations cleanly.
inline constexpr double kFlagRel = 1e-7;

namespace detail {
inline double relative_residual(double value, double scale) {
  return value / std::max(scale, std::numeric_limits<double>::min());
}
}  // namespace detail

/// Conjugate exponents 1/p + 1/q = 1 with p > 1.
struct ConjugatePair {
  double p;
  double q;

  explicit ConjugatePair(double p_in) : p(p_in), q(p_in / (p_in - 1.0)) {
    if (!(p_in > 1.0) || !std::isfinite(p_in)) {
      throw BadExponent("ConjugatePair: p must be finite and > 1, got " +
                        std::to_string(p_in));
    }
  }
};

/// |m|^s computed in one spectral pass as (m* m)^{s/2}.
inline ComplexMatrix abs_power(const ComplexMatrix& m, double s, const Tolerance& tol = {}) {
  return psd_power(hermitian_part(adjoint(m) * m), s / 2.0, tol);
}

/// (1/p)|a|^p + (1/q)|b|^q, the right-hand side of the inequality.
inline ComplexMatrix young_mean(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ConjugatePair& cp, const Tolerance& tol = {}) {
  return hermitian_part((1.0 / cp.p) * abs_power(a, cp.p, tol) +
                        (1.0 / cp.q) * abs_power(b, cp.q, tol));
}

/// The contraction that carries |ab*| onto ||a||b||: the adjoint of the
/// polar isometry of b. For b = nu|b| one has nu*|ab*|nu = ||a||b||, and
/// when |a|^p = |b|^q the right side is exactly the mean, so this single
/// matrix witnesses the equality condition whenever any contraction does.
inline ComplexMatrix canonical_witness(const ComplexMatrix& b, const Tolerance& tol = {}) {
  return adjoint(polar(b, tol).isometry);
}

/// The four spectra of the inequality: alpha = singular values of a,
/// beta of b, gamma of ab*, delta of the mean, with the eigenvector
/// bases of |ab*| and of the mean.
struct YoungSpectra {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma;
  std::vector<double> delta;
  ComplexMatrix gamma_vectors;
  ComplexMatrix delta_vectors;
};

inline YoungSpectra young_spectra(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const ConjugatePair& cp, const Tolerance& tol = {}) {
  if (!a.square() || !b.square()) throw NotSquare("young_spectra: inputs must be square");
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("young_spectra: dimensions " + std::to_string(a.rows()) +
                            " vs " + std::to_string(b.rows()));
  }
  YoungSpectra s;
  s.alpha = svd(a, tol).singular_values;
  s.beta = svd(b, tol).singular_values;

  const Svd product = svd(a * adjoint(b), tol);
  s.gamma = product.singular_values;
  s.gamma_vectors = product.right;

  const EigenDecomposition mean = hermitian_eigen(young_mean(a, b, cp, tol), tol);
  s.delta = mean.values;
  for (double& d : s.delta) d = std::max(d, 0.0);
  s.delta_vectors = mean.vectors;

  // gamma_k <= delta_k is a theorem; a violation beyond rounding can only
  // be a bug in this library and must not propagate silently.
  const double guard = tol.scaled(std::max(s.gamma[0], s.delta[0]));
  for (size_t k = 0; k < s.gamma.size(); ++k) {
    if (s.gamma[k] > s.delta[k] + guard) {
      throw DominanceViolated("young_spectra: gamma[" + std::to_string(k) +
                              "] = " + std::to_string(s.gamma[k]) + " exceeds delta[" +
                              std::to_string(k) + "] = " + std::to_string(s.delta[k]));
    }
  }
  return s;
}

struct InequalityVerdict {
  bool holds = false;
  int worst_index = 0;
  double worst_gap = 0.0;  // max_k (gamma_k - delta_k), may be negative
};

inline InequalityVerdict verify_singular_inequality(const YoungSpectra& s,
                                                    const Tolerance& tol = {}) {
  if (s.gamma.size() != s.delta.size() || s.gamma.empty()) {
    throw DimensionMismatch("verify_singular_inequality: gamma/delta lengths differ");
  }
  InequalityVerdict v;
  v.worst_gap = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < s.gamma.size(); ++k) {
    const double gap = s.gamma[k] - s.delta[k];
    if (gap > v.worst_gap) {
      v.worst_gap = gap;
      v.worst_index = static_cast<int>(k);
    }
  }
  v.holds = v.worst_gap <= tol.scaled(s.delta[0]);
  return v;
}

/// u = sum over the support of |ab*| of (delta eigenvector)(gamma
/// eigenvector)*. Then u*u is the support projection of |ab*| and
/// u|ab*|u* = sum gamma_k q_k <= mean, eigenvalue by eigenvalue.
inline ComplexMatrix build_partial_isometry(const YoungSpectra& s, const Tolerance& tol = {}) {
  const int n = static_cast<int>(s.gamma.size());
  if (s.gamma_vectors.rows() != n || s.delta_vectors.rows() != n) {
    throw DimensionMismatch("build_partial_isometry: vector blocks do not match spectra");
  }
  const double cutoff = rank_cutoff(tol, s.gamma[0]);
  int rank = 0;
  while (rank < n && s.gamma[rank] > cutoff) ++rank;
  if (rank > 0 && rank < n && s.gamma[rank - 1] - s.gamma[rank] <= tol.scaled(s.gamma[0])) {
    throw DegenerateCluster("build_partial_isometry: singular values " +
                            std::to_string(s.gamma[rank - 1]) + " and " +
                            std::to_string(s.gamma[rank]) +
                            " straddle the rank cutoff inside one cluster");
  }
  ComplexMatrix u = zeros(n, n);
  for (int k = 0; k < rank; ++k) {
    const ComplexVector dk = column(s.delta_vectors, k);
    const ComplexVector gk = column(s.gamma_vectors, k);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) u(i, j) += dk[i] * std::conj(gk[j]);
    }
  }
  return u;
}

struct ConditionVerdict {
  double residual = 0.0;  // raw residual, Frobenius or max-gap
  double scale = 0.0;     // reference scale the verdict compares against
  bool verdict = false;
};

struct NormEqualityVerdict {
  NormDescriptor norm;
  double lhs = 0.0;  // gauge of gamma
  double rhs = 0.0;  // gauge of delta
  bool verdict = false;
};

/// Pass/fail of the four equivalent equality conditions:
///   1. |a|^p = |b|^q            (Frobenius residual)
///   2. z|ab*|z* = mean for the canonical witness z
///   3. norm equality per descriptor (decisive only for strictly
///      increasing norms; others are reported but excluded)
///   4. gamma_k = delta_k for all k
/// The four verdicts must agree; a split is a numerical red flag.
struct EquivalenceReport {
  ConditionVerdict cond1;
  ConditionVerdict cond2;
  ComplexMatrix witness;  // contraction used for cond2
  std::vector<NormEqualityVerdict> cond3;
  bool cond3_applicable = false;
  bool cond3_verdict = false;
  ConditionVerdict cond4;
  YoungSpectra spectra;
  bool overall_consistent = false;
};

inline EquivalenceReport check_equivalence(const ComplexMatrix& a, const ComplexMatrix& b,
                                           const ConjugatePair& cp,
                                           const std::vector<NormDescriptor>& norms,
                                           const Tolerance& tol = {}) {
  EquivalenceReport report;
  report.spectra = young_spectra(a, b, cp, tol);

  const ComplexMatrix ap = abs_power(a, cp.p, tol);
  const ComplexMatrix bq = abs_power(b, cp.q, tol);
  report.cond1.residual = frobenius_norm(ap + (-1.0) * bq);
  report.cond1.scale = std::max(frobenius_norm(ap), frobenius_norm(bq));
  report.cond1.verdict =
      report.cond1.residual <= kMatrixEqualityRel * report.cond1.scale + tol.absolute;

  const ComplexMatrix mean = young_mean(a, b, cp, tol);
  report.witness = canonical_witness(b, tol);
  const ComplexMatrix conjugated =
      report.witness * matrix_abs(a * adjoint(b), tol) * adjoint(report.witness);
  report.cond2.residual = frobenius_norm(conjugated + (-1.0) * mean);
  report.cond2.scale = frobenius_norm(mean);
  report.cond2.verdict =
      report.cond2.residual <= kMatrixEqualityRel * report.cond2.scale + tol.absolute;

  bool all_strict_equal = true;
  for (const NormDescriptor& d : norms) {
    NormEqualityVerdict nv;
    nv.norm = d;
    nv.lhs = evaluate_gauge(d, report.spectra.gamma);
    nv.rhs = evaluate_gauge(d, report.spectra.delta);
    nv.verdict = std::abs(nv.lhs - nv.rhs) <=
                 kSpectraEqualityRel * std::max(nv.lhs, nv.rhs) + tol.absolute;
    if (d.strictly_increasing) {
      report.cond3_applicable = true;
      all_strict_equal = all_strict_equal && nv.verdict;
    }
    report.cond3.push_back(nv);
  }
  report.cond3_verdict = report.cond3_applicable && all_strict_equal;

  report.cond4.scale = report.spectra.delta[0];
  report.cond4.residual = 0.0;
  for (size_t k = 0; k < report.spectra.gamma.size(); ++k) {
    report.cond4.residual = std::max(
        report.cond4.residual, std::abs(report.spectra.gamma[k] - report.spectra.delta[k]));
  }
  report.cond4.verdict =
      report.cond4.residual <= kSpectraEqualityRel * report.cond4.scale + tol.absolute;

  bool agree = report.cond1.verdict == report.cond2.verdict &&
               report.cond1.verdict == report.cond4.verdict;
  if (report.cond3_applicable) {
    agree = agree && report.cond1.verdict == report.cond3_verdict;
  }
  report.overall_consistent = agree;
  return report;
}

/// Outcome of probing whether a given contraction realizes the equality.
struct ContractionGapReport {
  bool applicable = false;       // premise z|ab*|z* = mean held
  double premise_residual = 0.0;
  double gap = 0.0;              // max_k |gamma_k - delta_k|
  bool gap_within = false;
};

inline ContractionGapReport check_gamma_delta_from_contraction(
    const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& z,
    const ConjugatePair& cp, const Tolerance& tol = {}) {
  const double z_norm = svd(z, tol).singular_values[0];
  if (z_norm > 1.0 + tol.scaled(1.0)) {
    throw NotContraction("check_gamma_delta_from_contraction: ||z|| = " +
                         std::to_string(z_norm));
  }
  ContractionGapReport report;
  const ComplexMatrix mean = young_mean(a, b, cp, tol);
  const ComplexMatrix conjugated = z * matrix_abs(a * adjoint(b), tol) * adjoint(z);
  report.premise_residual = frobenius_norm(conjugated + (-1.0) * mean);
  report.applicable =
      report.premise_residual <= kMatrixEqualityRel * frobenius_norm(mean) + tol.absolute;
  if (!report.applicable) return report;

  const YoungSpectra s = young_spectra(a, b, cp, tol);
  for (size_t k = 0; k < s.gamma.size(); ++k) {
    report.gap = std::max(report.gap, std::abs(s.gamma[k] - s.delta[k]));
  }
  report.gap_within = report.gap <= kSpectraEqualityRel * s.delta[0] + tol.absolute;
  return report;
}

struct RangeInclusionVerdict {
  bool holds = false;
  double residual = 0.0;  // ||(1 - P_b)|ba|||_F
  double scale = 0.0;
};

/// Range of |ba| lies inside the range of b, for PSD a, b with equal
/// gamma/delta spectra and 1 < p < 2. Non-PSD inputs are first reduced
/// to their absolute values, which leave every spectrum unchanged.
inline RangeInclusionVerdict check_range_inclusion(const ComplexMatrix& a,
                                                   const ComplexMatrix& b,
                                                   const ConjugatePair& cp,
                                                   const Tolerance& tol = {}) {
  if (!(cp.p > 1.0) || !(cp.p < 2.0)) {
    throw BadExponent("check_range_inclusion: requires 1 < p < 2, got p = " +
                      std::to_string(cp.p));
  }
  const auto reduce = [&tol](const ComplexMatrix& m) {
    if (is_hermitian(m, tol) && is_psd(m, tol).psd) return hermitian_part(m);
    return matrix_abs(m, tol);
  };
  const ComplexMatrix pa = reduce(a);
  const ComplexMatrix pb = reduce(b);

  const YoungSpectra s = young_spectra(pa, pb, cp, tol);
  double gap = 0.0;
  for (size_t k = 0; k < s.gamma.size(); ++k) {
    gap = std::max(gap, std::abs(s.gamma[k] - s.delta[k]));
  }
  if (gap > kSpectraEqualityRel * s.delta[0] + tol.absolute) {
    throw PremiseNotMet("check_range_inclusion: gamma/delta spectra differ by " +
                        std::to_string(gap));
  }

  const ComplexMatrix ba_abs = matrix_abs(pb * pa, tol);
  const ComplexMatrix complement = identity(pb.rows()) + (-1.0) * range_projection(pb, tol);
  RangeInclusionVerdict v;
  v.residual = frobenius_norm(complement * ba_abs);
  v.scale = frobenius_norm(ba_abs);
  v.holds = v.residual <= kMatrixEqualityRel * v.scale + tol.absolute;
  return v;
}

/// One sample of the vector inequality <x^r xi, xi> <= <x xi, xi>^r.
struct HoelderSample {
  double lhs = 0.0;
  double rhs = 0.0;
  bool equality = false;     // lhs == rhs within flag tolerance
  bool eigenvector = false;  // x xi == <x xi, xi> xi within flag tolerance
};

inline HoelderSample check_vector_hoelder(const ComplexMatrix& x, const ComplexVector& xi,
                                          double r, const Tolerance& tol = {}) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw BadExponent("check_vector_hoelder: r must lie in (0,1), got " + std::to_string(r));
  }
  if (std::abs(vec_norm(xi) - 1.0) > tol.scaled(1.0)) {
    throw NotUnit("check_vector_hoelder: ||xi|| = " + std::to_string(vec_norm(xi)));
  }
  const ComplexMatrix xr = psd_power(x, r, tol);
  HoelderSample sample;
  sample.lhs = inner(xi, mat_vec(xr, xi)).real();
  const ComplexVector image = mat_vec(x, xi);
  const double mean = std::max(inner(xi, image).real(), 0.0);
  sample.rhs = std::pow(mean, r);

  const double scale = frobenius_norm(x);
  const double scale_r = std::pow(scale, r);
  if (sample.lhs > sample.rhs + tol.scaled(scale_r)) {
    throw DominanceViolated("check_vector_hoelder: lhs " + std::to_string(sample.lhs) +
                            " exceeds rhs " + std::to_string(sample.rhs));
  }
  sample.equality = std::abs(sample.rhs - sample.lhs) <= kFlagRel * scale_r + tol.absolute;
  double defect = 0.0;
  for (size_t i = 0; i < xi.size(); ++i) defect += std::norm(image[i] - mean * xi[i]);
  sample.eigenvector = std::sqrt(defect) <= kFlagRel * scale + tol.absolute;
  return sample;
}

struct ProjectionHoelderReport {
  double c = 0.0;                // trace(qxq), the candidate eigenvalue
  double min_eigenvalue = 0.0;   // of (qxq)^r - q x^r q
  bool equality = false;
  bool scalar_action = false;    // xq == c q within flag tolerance
};

/// Rank-one compression q x^r q <= (q x q)^r with equality iff xq = cq.
inline ProjectionHoelderReport check_projection_hoelder(const ComplexMatrix& x,
                                                        const ComplexMatrix& q, double r,
                                                        const Tolerance& tol = {}) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw BadExponent("check_projection_hoelder: r must lie in (0,1)");
  }
  if (!is_hermitian(q, tol) ||
      frobenius_norm(q * q + (-1.0) * q) > tol.scaled(1.0) * q.rows()) {
    throw NotProjection("check_projection_hoelder: q is not an orthogonal projection");
  }
  const double rank = trace(q).real();
  if (std::abs(rank - 1.0) > tol.scaled(1.0) * q.rows()) {
    throw NotRankOne("check_projection_hoelder: trace(q) = " + std::to_string(rank));
  }

  const ComplexMatrix qxq = hermitian_part(q * x * q);
  const ComplexMatrix lhs = psd_power(qxq, r, tol);
  const ComplexMatrix rhs = q * psd_power(x, r, tol) * q;
  const ComplexMatrix difference = hermitian_part(lhs + (-1.0) * rhs);

  const double scale = frobenius_norm(x);
  const double scale_r = std::pow(scale, r);
  ProjectionHoelderReport report;
  report.min_eigenvalue = hermitian_eigen(difference, tol).values[x.rows() - 1];
  if (report.min_eigenvalue < -(kFlagRel * scale_r + tol.absolute)) {
    throw DominanceViolated("check_projection_hoelder: compression inequality violated, "
                            "minimum eigenvalue " + std::to_string(report.min_eigenvalue));
  }
  report.c = trace(qxq).real();
  report.equality = frobenius_norm(difference) <= kFlagRel * scale_r + tol.absolute;
  report.scalar_action =
      frobenius_norm(x * q + (-report.c) * q) <= kFlagRel * scale + tol.absolute;
  return report;
}

/// Residuals of the polar conjugation identities linking |ab*| and
/// ||a||b|| through the isometry of b; all residuals are relative.
struct PolarIdentityReport {
  double conjugation_residual = 0.0;  // nu ||a||b|| nu* vs |ab*|
  double recovery_residual = 0.0;     // nu* |ab*| nu vs ||a||b||
  double spectral_gap = 0.0;          // max_k relative eigenvalue gap
};

inline PolarIdentityReport check_polar_identities(const ComplexMatrix& a,
                                                  const ComplexMatrix& b,
                                                  const Tolerance& tol = {}) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    throw DimensionMismatch("check_polar_identities: inputs must be square, same size");
  }
  const ComplexMatrix nu = polar(b, tol).isometry;
  const ComplexMatrix mixed = matrix_abs(matrix_abs(a, tol) * matrix_abs(b, tol), tol);
  const Svd product = svd(a * adjoint(b), tol);
  const ComplexMatrix product_abs =
      hermitian_part(product.right * diag(product.singular_values) * adjoint(product.right));

  PolarIdentityReport report;
  const double scale = frobenius_norm(product_abs);
  report.conjugation_residual = detail::relative_residual(
      frobenius_norm(nu * mixed * adjoint(nu) + (-1.0) * product_abs), scale);
  report.recovery_residual = detail::relative_residual(
      frobenius_norm(adjoint(nu) * product_abs * nu + (-1.0) * mixed), scale);

  const std::vector<double> mixed_values = svd(mixed, tol).singular_values;
  for (size_t k = 0; k < mixed_values.size(); ++k) {
    report.spectral_gap =
        std::max(report.spectral_gap,
                 detail::relative_residual(
                     std::abs(product.singular_values[k] - mixed_values[k]),
                     product.singular_values[0]));
  }
  return report;
}

struct LambdaBoundVerdict {
  bool holds = false;
  int worst_index = 0;
  double worst_excess = 0.0;
};

/// lambda_k(axb) <= ||a|| ||b|| lambda_k(x), index by index.
inline LambdaBoundVerdict check_lambda_bound(const ComplexMatrix& a, const ComplexMatrix& x,
                                             const ComplexMatrix& b, const Tolerance& tol = {}) {
  if (a.cols() != x.rows() || x.cols() != b.rows()) {
    throw DimensionMismatch("check_lambda_bound: inner dimensions do not chain");
  }
  const std::vector<double> lam_x = svd(x, tol).singular_values;
  const std::vector<double> lam_axb = svd(a * x * b, tol).singular_values;
  const double factor = svd(a, tol).singular_values[0] * svd(b, tol).singular_values[0];

  LambdaBoundVerdict v;
  v.worst_excess = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < lam_axb.size(); ++k) {
    const double bound = factor * (k < lam_x.size() ? lam_x[k] : 0.0);
    const double excess = lam_axb[k] - bound;
    if (excess > v.worst_excess) {
      v.worst_excess = excess;
      v.worst_index = static_cast<int>(k);
    }
  }
  v.holds = v.worst_excess <= tol.scaled(factor * (lam_x.empty() ? 0.0 : lam_x[0]));
  return v;
}

}  // namespace young
