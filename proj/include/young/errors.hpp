#pragma once

#include <stdexcept>
#include <string>

namespace young {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquare : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

// Sweep limit exceeded; carries the remaining off-diagonal mass.
struct NoConvergence : Error {
  double off_diagonal_residual;
  NoConvergence(const std::string& what, double off)
      : Error(what), off_diagonal_residual(off) {}
};

struct NotPsd : Error {
  double min_eigenvalue;
  NotPsd(const std::string& what, double min_eig)
      : Error(what), min_eigenvalue(min_eig) {}
};

struct NegativeEntry : Error {
  using Error::Error;
};

struct BadExponent : Error {
  using Error::Error;
};

struct DominanceViolated : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotContraction : Error {
  using Error::Error;
};

struct PremiseNotMet : Error {
  using Error::Error;
};

struct NotUnit : Error {
  using Error::Error;
};

struct NotProjection : Error {
  using Error::Error;
};

struct NotRankOne : Error {
  using Error::Error;
};

struct DegenerateCluster : Error {
  using Error::Error;
};

struct BadDimension : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace young
