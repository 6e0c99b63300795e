#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "young/generators.hpp"
#include "young/verify.hpp"

namespace young {

// Witness thresholds: equality must hold four orders of magnitude more
// tightly than the violation that would count as a counterexample, so
// rounding noise cannot manufacture one.
inline constexpr double kSearchEqualityRel = 1e-8;
inline constexpr double kSearchViolationThreshold = 1e-4;
inline constexpr double kContractionPenalty = 10.0;

/// Relative residuals of the absorption/intertwining conditions
///   |b*| z*z = |b*|,   |b| zz* = |b|,   |b| z = z |b*|.
struct ThreeConditions {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  double max_residual() const { return std::max(r1, std::max(r2, r3)); }
};

namespace detail {

inline ThreeConditions three_conditions_from_parts(const ComplexMatrix& abs_b,
                                                   const ComplexMatrix& abs_b_star,
                                                   const ComplexMatrix& z) {
  const double scale = frobenius_norm(abs_b);
  ThreeConditions tc;
  tc.r1 = relative_residual(
      frobenius_norm(abs_b_star * adjoint(z) * z + (-1.0) * abs_b_star), scale);
  tc.r2 = relative_residual(frobenius_norm(abs_b * z * adjoint(z) + (-1.0) * abs_b), scale);
  tc.r3 = relative_residual(frobenius_norm(abs_b * z + (-1.0) * (z * abs_b_star)), scale);
  return tc;
}

// The b-dependent half of a search evaluation, from one svd of b.
struct BParts {
  ComplexMatrix abs_b;       // |b|
  ComplexMatrix abs_b_star;  // |b*|
  ComplexMatrix bq;          // |b|^q
  ComplexMatrix bq_star;     // |b*|^q
  double scale = 0.0;        // || |b|^q ||_F
};

inline BParts compute_b_parts(const ComplexMatrix& b, double q, const Tolerance& tol) {
  const Svd dec = svd(b, tol);
  std::vector<double> powered = dec.singular_values;
  for (double& s : powered) s = std::pow(s, q);
  BParts parts;
  parts.abs_b = hermitian_part(dec.right * diag(dec.singular_values) * adjoint(dec.right));
  parts.abs_b_star = hermitian_part(dec.left * diag(dec.singular_values) * adjoint(dec.left));
  parts.bq = hermitian_part(dec.right * diag(powered) * adjoint(dec.right));
  parts.bq_star = hermitian_part(dec.left * diag(powered) * adjoint(dec.left));
  parts.scale = frobenius_norm(parts.bq);
  return parts;
}

// Top singular value by power iteration on z*z — cheap enough to run on
// every probe, deterministic, and only used inside the descent penalty.
// Witness gating always re-measures with a full svd.
inline double top_singular_estimate(const ComplexMatrix& z) {
  const int n = z.rows();
  ComplexVector x(n);
  for (int i = 0; i < n; ++i) x[i] = Complex(1.0 + i, 0.0);
  double inv = 1.0 / vec_norm(x);
  for (auto& e : x) e *= inv;
  double sigma = 0.0;
  for (int iter = 0; iter < 40; ++iter) {
    ComplexVector zx = mat_vec(z, x);
    sigma = vec_norm(zx);
    if (sigma == 0.0) return 0.0;
    x = mat_vec(adjoint(z), zx);
    const double len = vec_norm(x);
    if (len == 0.0) return sigma;
    inv = 1.0 / len;
    for (auto& e : x) e *= inv;
  }
  return sigma;
}

inline double search_objective(const BParts& parts, double equality_residual, double z_norm) {
  return relative_residual(equality_residual, parts.scale) +
         kContractionPenalty * std::max(0.0, z_norm - 1.0);
}

inline double equality_residual(const BParts& parts, const ComplexMatrix& z) {
  return frobenius_norm(z * parts.bq_star * adjoint(z) + (-1.0) * parts.bq);
}

}  // namespace detail

inline ThreeConditions three_conditions(const ComplexMatrix& b, const ComplexMatrix& z,
                                        const Tolerance& tol = {}) {
  if (!b.square() || !z.square() || b.rows() != z.rows()) {
    throw DimensionMismatch("three_conditions: b and z must be square, same size");
  }
  const detail::BParts parts = detail::compute_b_parts(b, 1.0, tol);
  return detail::three_conditions_from_parts(parts.abs_b, parts.abs_b_star, z);
}

/// Given the three conditions, the equality z|ab*|z* = (1/p)|a|^p + (1/q)|b|^q
/// must follow for a = (|b|^q)^{1/p}. Returns the relative residual of
/// that equality, computed along the honest route through |ab*|.
inline double check_sufficiency(const ComplexMatrix& b, const ComplexMatrix& z,
                                const ConjugatePair& cp, const Tolerance& tol = {}) {
  const double z_norm = svd(z, tol).singular_values[0];
  if (z_norm > 1.0 + tol.scaled(1.0)) {
    throw NotContraction("check_sufficiency: ||z|| = " + std::to_string(z_norm));
  }
  const ThreeConditions tc = three_conditions(b, z, tol);
  if (tc.max_residual() > kMatrixEqualityRel) {
    throw PremiseNotMet("check_sufficiency: conditions residual " +
                        std::to_string(tc.max_residual()));
  }
  const ComplexMatrix bq = abs_power(b, cp.q, tol);
  const ComplexMatrix a = psd_power(bq, 1.0 / cp.p, tol);
  const ComplexMatrix conjugated = z * matrix_abs(a * adjoint(b), tol) * adjoint(z);
  return detail::relative_residual(frobenius_norm(conjugated + (-1.0) * bq),
                                   frobenius_norm(bq));
}

/// Finite-rank version of the faithful-trace derivation: when the
/// equality z|b*|^q z* = |b|^q holds, the three conditions must follow.
/// Returns their residuals for the caller to assert on.
inline ThreeConditions check_trace_argument(const ComplexMatrix& b, const ComplexMatrix& z,
                                            const ConjugatePair& cp, const Tolerance& tol = {}) {
  const double z_norm = svd(z, tol).singular_values[0];
  if (z_norm > 1.0 + tol.scaled(1.0)) {
    throw NotContraction("check_trace_argument: ||z|| = " + std::to_string(z_norm));
  }
  const ComplexMatrix bq = abs_power(b, cp.q, tol);
  const ComplexMatrix bq_star = abs_power(adjoint(b), cp.q, tol);
  const double residual = frobenius_norm(z * bq_star * adjoint(z) + (-1.0) * bq);
  if (residual > kMatrixEqualityRel * frobenius_norm(bq) + tol.absolute) {
    throw PremiseNotMet("check_trace_argument: equality residual " +
                        std::to_string(residual));
  }
  return three_conditions(b, z, tol);
}

/// Restrictions for structured search variants.
struct SearchOptions {
  bool psd_diagonal_b = false;  // sample b as a PSD diagonal
  bool unitary_z = false;       // keep z unitary (projected on decode)
};

struct SearchResult {
  double best_objective = std::numeric_limits<double>::infinity();
  long trials = 0;
  std::uint64_t seed = 0;
  long candidates = 0;  // points that passed the equality filter
  bool has_witness = false;
  ComplexMatrix witness_b;
  ComplexMatrix witness_z;
  double witness_violation = 0.0;
  double witness_equality_residual = 0.0;
};

/// Randomized local search for a pair (b, z) that satisfies the equality
/// while violating one of the three conditions. Each trial draws a
/// starting pair (every fourth trial starts from the exact witness
/// z = nu*, so the equality filter is never vacuous), then runs
/// fixed-step coordinate descent over the real/imaginary parts of the
/// entries of z and b. A witness needs a condition residual above 1e-4
/// at a point whose equality residual is below 1e-8 relative, with a
/// full-svd re-check that z really is a contraction.
inline SearchResult search_necessity_counterexample(const GeneratorConfig& cfg, long trials,
                                                    const Tolerance& tol = {},
                                                    const SearchOptions& options = {}) {
  if (trials < 1) {
    throw BadDimension("search_necessity_counterexample: trials must be >= 1");
  }
  const int n = cfg.dimension;
  const double q = cfg.p / (cfg.p - 1.0);
  constexpr int kProbes = 200;
  constexpr double kInitialStep = 1e-3;

  SearchResult result;
  result.trials = trials;
  result.seed = cfg.seed;

  // Parameter layout: re/im of z entries, then re/im of b entries.
  const int z_params = 2 * n * n;
  const int total_params = 4 * n * n;
  std::vector<double> params(total_params);

  const auto decode_z = [&](const std::vector<double>& prm) {
    ComplexMatrix z(n, n);
    for (int i = 0; i < n * n; ++i) {
      z(i / n, i % n) = Complex(prm[2 * i], prm[2 * i + 1]);
    }
    if (options.unitary_z) {
      const Svd dec = svd(z, tol);
      if (dec.singular_values[n - 1] > 1e-6 * dec.singular_values[0]) {
        return dec.left * adjoint(dec.right);
      }
    }
    return z;
  };
  const auto decode_b = [&](const std::vector<double>& prm) {
    ComplexMatrix b(n, n);
    for (int i = 0; i < n * n; ++i) {
      const int at = z_params + 2 * i;
      b(i / n, i % n) = Complex(prm[at], prm[at + 1]);
    }
    if (options.psd_diagonal_b) {
      std::vector<double> d(n);
      for (int i = 0; i < n; ++i) d[i] = std::abs(b(i, i).real());
      return diag(d);
    }
    return b;
  };
  const auto encode = [&](const ComplexMatrix& z, const ComplexMatrix& b) {
    for (int i = 0; i < n * n; ++i) {
      params[2 * i] = z(i / n, i % n).real();
      params[2 * i + 1] = z(i / n, i % n).imag();
      params[z_params + 2 * i] = b(i / n, i % n).real();
      params[z_params + 2 * i + 1] = b(i / n, i % n).imag();
    }
  };

  const auto consider = [&](const detail::BParts& parts, const ComplexMatrix& b,
                            const ComplexMatrix& z, double eq_residual) {
    if (eq_residual > kSearchEqualityRel * parts.scale) return;
    ++result.candidates;
    if (result.has_witness) return;
    if (svd(z, tol).singular_values[0] > 1.0 + tol.scaled(1.0)) return;
    const ThreeConditions tc =
        detail::three_conditions_from_parts(parts.abs_b, parts.abs_b_star, z);
    if (tc.max_residual() > kSearchViolationThreshold) {
      result.has_witness = true;
      result.witness_b = b;
      result.witness_z = z;
      result.witness_violation = tc.max_residual();
      result.witness_equality_residual = detail::relative_residual(eq_residual, parts.scale);
    }
  };

  for (long trial = 0; trial < trials; ++trial) {
    SeedStream stream(cfg.seed, 0x1000000ULL + static_cast<std::uint64_t>(trial));
    ComplexMatrix b0;
    if (options.psd_diagonal_b) {
      const std::vector<double> profile = decay_profile(cfg);
      std::vector<double> d(n);
      for (int i = 0; i < n; ++i) {
        d[i] = profile.empty() ? std::abs(stream.next_gaussian()) : profile[i];
      }
      b0 = diag(d);
    } else {
      b0 = detail::sample_matrix(cfg, stream, tol);
    }
    ComplexMatrix z0;
    if (options.unitary_z) {
      z0 = random_unitary(stream, n, tol);
    } else if (trial % 4 == 0) {
      z0 = canonical_witness(b0, tol);
    } else {
      z0 = clip_to_contraction(gaussian_matrix(stream, n, n), tol);
    }
    encode(z0, b0);

    ComplexMatrix cur_b = decode_b(params);
    ComplexMatrix cur_z = decode_z(params);
    detail::BParts parts = detail::compute_b_parts(cur_b, q, tol);
    double z_norm = detail::top_singular_estimate(cur_z);
    double eq = detail::equality_residual(parts, cur_z);
    double objective = detail::search_objective(parts, eq, z_norm);
    consider(parts, cur_b, cur_z, eq);

    double step = kInitialStep;
    int since_improvement = 0;
    for (int probe = 0; probe < kProbes; ++probe) {
      const int coord = probe % total_params;
      const bool touches_z = coord < z_params;
      bool improved = false;
      for (const double delta : {step, -2.0 * step}) {
        params[coord] += delta;
        ComplexMatrix cand_b = cur_b;
        ComplexMatrix cand_z = cur_z;
        detail::BParts cand_parts = parts;
        double cand_z_norm = z_norm;
        if (touches_z) {
          cand_z = decode_z(params);
          cand_z_norm = detail::top_singular_estimate(cand_z);
        } else {
          cand_b = decode_b(params);
          cand_parts = detail::compute_b_parts(cand_b, q, tol);
        }
        const double cand_eq = detail::equality_residual(cand_parts, cand_z);
        const double cand_objective = detail::search_objective(cand_parts, cand_eq, cand_z_norm);
        if (cand_objective < objective) {
          cur_b = cand_b;
          cur_z = cand_z;
          parts = cand_parts;
          z_norm = cand_z_norm;
          eq = cand_eq;
          objective = cand_objective;
          consider(parts, cur_b, cur_z, eq);
          improved = true;
          break;
        }
      }
      if (!improved) {
        params[coord] += step;  // undo the net -step left by the loop
        if (++since_improvement >= total_params) {
          step *= 0.5;
          since_improvement = 0;
        }
      } else {
        since_improvement = 0;
      }
    }
    result.best_objective = std::min(result.best_objective, objective);
  }
  return result;
}

}  // namespace young
