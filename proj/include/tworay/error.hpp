#pragma once

#include <stdexcept>
#include <string>

namespace tworay {

enum class Err {
  ZeroWeight,
  NonConvexSpan,
  InvalidCone,
  InvalidCox,
  NotHomogeneous,
  NonIntegralResult,
  FewerThanThreeRayGroups,
  EmptyPolynomial,
  NoTangentMonomial,
  AmbiguousTangent,
  NeedsLocalWeights,
  GermMismatch,
  ReducibleExceptional,
  NonIntegralExponent,
  NoValidSplit,
  InconsistentWeights,
  NotLinearlySolvable,
  DimensionMismatch,
  ChartUnderspecified,
  UnresolvedRestriction,
  UnprojectionBudget,
  SchemaError,
  DegreeMismatch,
};

const char* err_name(Err e);

/// All engine failures are thrown as EngineError; `code` carries the
/// machine-readable cause, what() a human explanation.
class EngineError : public std::runtime_error {
 public:
  EngineError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw EngineError(code, what); }

}  // namespace tworay
