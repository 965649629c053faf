#pragma once

#include <stdexcept>
#include <string>

namespace tsgpr {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPositiveDeterminant : Error {
  explicit NonPositiveDeterminant(double det)
      : Error("deformation tensor has non-positive determinant: " + std::to_string(det)) {}
};

struct NotPositiveDefinite : Error {
  NotPositiveDefinite() : Error("Gram matrix is not positive definite after jitter") {}
};

struct OptimizationFailed : Error {
  explicit OptimizationFailed(const std::string& msg) : Error("optimization failed: " + msg) {}
};

struct TooFewPoints : Error {
  explicit TooFewPoints(const std::string& msg) : Error("too few data points: " + msg) {}
};

struct CutoffOutOfRange : Error {
  explicit CutoffOutOfRange(const std::string& msg) : Error("cutoff out of range: " + msg) {}
};

struct PathNotAnchored : Error {
  PathNotAnchored() : Error("deformation path must start at the reference state C = I") {}
};

struct NotIsochoric : Error {
  explicit NotIsochoric(double det) : Error("det C = " + std::to_string(det) + " violates det C = 1") {}
};

struct EmptyDataset : Error {
  explicit EmptyDataset(const std::string& msg) : Error("empty or degenerate dataset: " + msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("domain error: " + msg) {}
};

struct GentDomainViolation : Error {
  GentDomainViolation() : Error("Gent model domain violated: I1bar - 3 >= Jm") {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& msg) : Error("rank-deficient system: " + msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("I/O error: " + msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

}  // namespace tsgpr
