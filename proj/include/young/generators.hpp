#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "young/decompositions.hpp"
#include "young/matrix.hpp"

namespace young {

/// Deterministic substream RNG: a splitmix64 counter sequence whose
/// initial state mixes (seed, stream), so any (seed, stream) pair names
/// the same values on every platform. Gaussians come from Box-Muller on
/// 53-bit uniforms; std::normal_distribution is implementation-defined
/// and would break bit-reproducibility.
class SeedStream {
 public:
  SeedStream(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(mix(seed + kGolden) + stream)) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform on (0,1), never exactly 0 or 1.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double radius = std::sqrt(-2.0 * std::log(next_uniform()));
    const double angle = 2.0 * std::numbers::pi * next_uniform();
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  Complex next_complex_gaussian() {
    const double re = next_gaussian();
    return Complex(re, next_gaussian());
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

enum class DecayKind { None, Geometric, PowerLaw };

/// Instance factory parameters. Decaying spectra model compactness at
/// finite dimension: geometric(r) gives sigma_k = r^k, powerlaw(e)
/// gives sigma_k = (k+1)^-e.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  int dimension = 2;
  double p = 2.0;
  DecayKind decay = DecayKind::None;
  double decay_parameter = 0.0;

  GeneratorConfig(std::uint64_t seed_in, int dimension_in, double p_in = 2.0,
                  DecayKind decay_in = DecayKind::None, double decay_parameter_in = 0.0)
      : seed(seed_in),
        dimension(dimension_in),
        p(p_in),
        decay(decay_in),
        decay_parameter(decay_parameter_in) {
    if (dimension < 1 || dimension > 64) {
      throw BadDimension("GeneratorConfig: dimension must be in [1, 64], got " +
                         std::to_string(dimension));
    }
    if (!(p > 1.0) || !std::isfinite(p)) {
      throw BadExponent("GeneratorConfig: p must be finite and > 1, got " +
                        std::to_string(p));
    }
    if (decay == DecayKind::Geometric &&
        !(decay_parameter > 0.0 && decay_parameter < 1.0)) {
      throw BadExponent("GeneratorConfig: geometric ratio must lie in (0,1)");
    }
    if (decay == DecayKind::PowerLaw && !(decay_parameter > 0.0)) {
      throw BadExponent("GeneratorConfig: powerlaw exponent must be positive");
    }
  }
};

/// Target singular values for the configured decay; empty for None.
inline std::vector<double> decay_profile(const GeneratorConfig& cfg) {
  std::vector<double> profile;
  if (cfg.decay == DecayKind::None) return profile;
  profile.resize(cfg.dimension);
  for (int k = 0; k < cfg.dimension; ++k) {
    profile[k] = cfg.decay == DecayKind::Geometric
                     ? std::pow(cfg.decay_parameter, k)
                     : std::pow(k + 1.0, -cfg.decay_parameter);
  }
  return profile;
}

inline ComplexMatrix gaussian_matrix(SeedStream& stream, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = stream.next_complex_gaussian();
  }
  return m;
}

/// Haar-like unitary: polar isometry of a Gaussian draw. Gaussian
/// matrices are almost surely far from singular; redraw on the
/// measure-zero-ish near-degenerate cases so the result is truly unitary.
inline ComplexMatrix random_unitary(SeedStream& stream, int n, const Tolerance& tol = {}) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Svd dec = svd(gaussian_matrix(stream, n, n), tol);
    if (dec.singular_values[n - 1] > 1e-6 * dec.singular_values[0]) {
      return dec.left * adjoint(dec.right);
    }
  }
  throw NoConvergence("random_unitary: persistent near-singular draws", 0.0);
}

/// Clips singular values to <= 1. Matrices already inside the unit ball
/// are returned bit-identical.
inline ComplexMatrix clip_to_contraction(const ComplexMatrix& m, const Tolerance& tol = {}) {
  const Svd dec = svd(m, tol);
  if (dec.singular_values.empty() || dec.singular_values[0] <= 1.0) return m;
  std::vector<double> clipped = dec.singular_values;
  for (double& s : clipped) s = std::min(s, 1.0);
  return dec.left * diag(clipped) * adjoint(dec.right);
}

namespace detail {

// One square draw honoring the decay profile: Gaussian when no decay is
// requested, otherwise u * diag(profile) * v* with independent unitaries.
inline ComplexMatrix sample_matrix(const GeneratorConfig& cfg, SeedStream& stream,
                                   const Tolerance& tol = {}) {
  if (cfg.decay == DecayKind::None) {
    return gaussian_matrix(stream, cfg.dimension, cfg.dimension);
  }
  const ComplexMatrix u = random_unitary(stream, cfg.dimension, tol);
  const ComplexMatrix v = random_unitary(stream, cfg.dimension, tol);
  return u * diag(decay_profile(cfg)) * adjoint(v);
}

}  // namespace detail

/// Independent pair (a, b), both following the configured spectrum decay.
inline std::pair<ComplexMatrix, ComplexMatrix> random_pair(const GeneratorConfig& cfg,
                                                           const Tolerance& tol = {}) {
  SeedStream stream_a(cfg.seed, 0);
  SeedStream stream_b(cfg.seed, 1);
  return {detail::sample_matrix(cfg, stream_a, tol), detail::sample_matrix(cfg, stream_b, tol)};
}

/// Pair with |a|^p = |b|^q by construction: both absolute values are
/// powers of one PSD matrix c (|a| = c^{1/p}, |b| = c^{1/q}, built in
/// c's own eigenbasis so no solver error enters the guarantee), then
/// dressed with independent unitary polar factors.
inline std::pair<ComplexMatrix, ComplexMatrix> equality_family(const GeneratorConfig& cfg,
                                                               const Tolerance& tol = {}) {
  SeedStream stream_c(cfg.seed, 16);
  SeedStream stream_u(cfg.seed, 17);
  SeedStream stream_v(cfg.seed, 18);
  const int n = cfg.dimension;
  const double q = cfg.p / (cfg.p - 1.0);

  ComplexMatrix basis(n, n);
  std::vector<double> values;
  if (cfg.decay == DecayKind::None) {
    const ComplexMatrix g = gaussian_matrix(stream_c, n, n);
    const EigenDecomposition eig =
        hermitian_eigen(hermitian_part((1.0 / n) * (adjoint(g) * g)), tol);
    basis = eig.vectors;
    values = eig.values;
    for (double& v : values) v = std::max(v, 0.0);
  } else {
    basis = random_unitary(stream_c, n, tol);
    values = decay_profile(cfg);
  }

  std::vector<double> root_p(values), root_q(values);
  for (int k = 0; k < n; ++k) {
    root_p[k] = std::pow(values[k], 1.0 / cfg.p);
    root_q[k] = std::pow(values[k], 1.0 / q);
  }
  const ComplexMatrix abs_a = hermitian_part(basis * diag(root_p) * adjoint(basis));
  const ComplexMatrix abs_b = hermitian_part(basis * diag(root_q) * adjoint(basis));
  return {random_unitary(stream_u, n, tol) * abs_a, random_unitary(stream_v, n, tol) * abs_b};
}

struct CounterexampleInstance {
  ComplexMatrix a;
  ComplexMatrix b;
  double p = 2.0;
};

/// diag(sqrt 2, 1, 0, ...) against diag(sqrt 2, 0, 0, ...) at p = q = 2:
/// operator norms of |ab*| and the mean agree (both 2) while every
/// strictly increasing norm separates them.
inline CounterexampleInstance opnorm_counterexample(int dim) {
  if (dim < 2) {
    throw BadDimension("opnorm_counterexample: dimension must be >= 2, got " +
                       std::to_string(dim));
  }
  std::vector<double> da(dim, 0.0), db(dim, 0.0);
  da[0] = std::sqrt(2.0);
  da[1] = 1.0;
  db[0] = std::sqrt(2.0);
  return CounterexampleInstance{diag(da), diag(db), 2.0};
}

/// Random contraction: Gaussian draw with singular values clipped to 1.
/// With want_identity the identity contraction is returned instead.
inline ComplexMatrix contraction(const GeneratorConfig& cfg, bool want_identity = false,
                                 const Tolerance& tol = {}) {
  if (want_identity) return identity(cfg.dimension);
  SeedStream stream(cfg.seed, 32);
  return clip_to_contraction(gaussian_matrix(stream, cfg.dimension, cfg.dimension), tol);
}

}  // namespace young
