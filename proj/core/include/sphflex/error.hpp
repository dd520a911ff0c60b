#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphflex {

enum class ErrorCode {
  Disconnected,
  SelfLoop,
  DuplicateEdge,
  UnknownVertex,
  BudgetExceeded,
  NotNap,
  InvalidCut,
  UnknownRow,
  InconsistentTypes,
  AmbiguousAtTolerance,
  NoSymmetryFound,
  DomainViolation,
  NoRealSolution,
  DegenerateAxis,
  OutOfRange,
  PoleT,
  NegativeDiscriminant,
  ZeroDivisor,
  InsufficientSamples,
  DegenerateRealization,
  DegenerateMotion,
  SeedNotOnCurve,
  RankDeficient,
  StepFailure,
  UnderConstrained,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace sphflex
