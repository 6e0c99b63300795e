#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "young/decompositions.hpp"
#include "young/matrix.hpp"

namespace young {

/// Symmetric-gauge norm family evaluated on singular value sequences.
/// The dyadic gauge sum sigma_k * 2^-k separates any two distinct
/// dominated sequences, so it is strictly increasing like the finite
/// Schatten norms; the operator and Ky-Fan norms are not.
struct NormDescriptor {
  enum class Kind { Operator, Schatten, KyFan, Dyadic };

  Kind kind = Kind::Operator;
  double p = 0.0;  // Schatten exponent
  int k = 0;       // Ky-Fan order
  bool strictly_increasing = false;

  static NormDescriptor operator_norm() {
    return NormDescriptor{Kind::Operator, 0.0, 0, false};
  }
  static NormDescriptor schatten(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
      throw BadExponent("schatten: p must be finite and >= 1, got " + std::to_string(p));
    }
    return NormDescriptor{Kind::Schatten, p, 0, true};
  }
  static NormDescriptor kyfan(int k) {
    if (k < 1) throw BadDimension("kyfan: order must be >= 1, got " + std::to_string(k));
    return NormDescriptor{Kind::KyFan, 0.0, k, false};
  }
  static NormDescriptor dyadic() {
    return NormDescriptor{Kind::Dyadic, 0.0, 0, true};
  }

  std::string name() const {
    std::ostringstream out;  // default formatting: "schatten:1.5", not "1.500000"
    switch (kind) {
      case Kind::Operator: return "op";
      case Kind::Schatten: out << "schatten:" << p; return out.str();
      case Kind::KyFan: out << "kyfan:" << k; return out.str();
      case Kind::Dyadic: return "dyadic";
    }
    return "?";
  }
};

/// Parses the CLI spellings "op", "schatten:p", "kyfan:k", "dyadic".
inline NormDescriptor parse_norm(const std::string& text) {
  if (text == "op") return NormDescriptor::operator_norm();
  if (text == "dyadic") return NormDescriptor::dyadic();
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  try {
    if (colon != std::string::npos && head == "schatten") {
      return NormDescriptor::schatten(std::stod(text.substr(colon + 1)));
    }
    if (colon != std::string::npos && head == "kyfan") {
      return NormDescriptor::kyfan(std::stoi(text.substr(colon + 1)));
    }
  } catch (const std::logic_error&) {
    throw ParseError("parse_norm: bad parameter in '" + text + "'");
  }
  throw ParseError("parse_norm: unknown norm '" + text + "'");
}

inline std::vector<double> rearrange_decreasing(std::vector<double> v) {
  for (double entry : v) {
    if (!(entry >= 0.0) || !std::isfinite(entry)) {
      throw NegativeEntry("rearrange_decreasing: entry " + std::to_string(entry) +
                          " is negative or not finite");
    }
  }
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

/// Gauge value of a nonnegative sequence; trailing zeros never contribute.
inline double evaluate_gauge(const NormDescriptor& d, const std::vector<double>& seq) {
  const std::vector<double> s = rearrange_decreasing(seq);
  switch (d.kind) {
    case NormDescriptor::Kind::Operator:
      return s.empty() ? 0.0 : s[0];
    case NormDescriptor::Kind::Schatten: {
      double sum = 0.0;
      for (double x : s) sum += std::pow(x, d.p);
      return std::pow(sum, 1.0 / d.p);
    }
    case NormDescriptor::Kind::KyFan: {
      double sum = 0.0;
      for (int j = 0; j < d.k && j < static_cast<int>(s.size()); ++j) sum += s[j];
      return sum;
    }
    case NormDescriptor::Kind::Dyadic: {
      double sum = 0.0;
      double weight = 1.0;
      for (double x : s) {
        sum += x * weight;
        weight *= 0.5;
      }
      return sum;
    }
  }
  return 0.0;
}

inline double evaluate_norm(const NormDescriptor& d, const ComplexMatrix& m,
                            const Tolerance& tol = {}) {
  return evaluate_gauge(d, svd(m, tol).singular_values);
}

enum class StrictnessVerdict { Consistent, Violation };

/// Probes the strictly-increasing property on one dominated pair
/// 0 <= a_i <= b_i: equal gauge values with a != b disprove strictness.
inline StrictnessVerdict check_strictly_increasing_witness(const NormDescriptor& d,
                                                           const std::vector<double>& a,
                                                           const std::vector<double>& b,
                                                           const Tolerance& tol = {}) {
  const size_t len = std::max(a.size(), b.size());
  double top = 0.0;
  for (size_t i = 0; i < len; ++i) {
    const double ai = i < a.size() ? a[i] : 0.0;
    const double bi = i < b.size() ? b[i] : 0.0;
    if (!(ai >= 0.0) || !std::isfinite(ai) || !std::isfinite(bi)) {
      throw NegativeEntry("check_strictly_increasing_witness: entries must be finite, >= 0");
    }
    if (ai > bi + tol.scaled(bi)) {
      throw DominanceViolated("check_strictly_increasing_witness: a[" + std::to_string(i) +
                              "] exceeds b[" + std::to_string(i) + "]");
    }
    top = std::max(top, bi);
  }
  const double ga = evaluate_gauge(d, a);
  const double gb = evaluate_gauge(d, b);
  bool some_strict = false;
  for (size_t i = 0; i < len; ++i) {
    const double ai = i < a.size() ? a[i] : 0.0;
    const double bi = i < b.size() ? b[i] : 0.0;
    if (bi - ai > tol.scaled(top)) some_strict = true;
  }
  if (std::abs(ga - gb) <= tol.scaled(gb) && some_strict) {
    return StrictnessVerdict::Violation;
  }
  return StrictnessVerdict::Consistent;
}

}  // namespace young
