#include "sphflex/error.hpp"

namespace sphflex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotNap: return "NotNap";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::UnknownRow: return "UnknownRow";
    case ErrorCode::InconsistentTypes: return "InconsistentTypes";
    case ErrorCode::AmbiguousAtTolerance: return "AmbiguousAtTolerance";
    case ErrorCode::NoSymmetryFound: return "NoSymmetryFound";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NoRealSolution: return "NoRealSolution";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::PoleT: return "PoleT";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::DegenerateRealization: return "DegenerateRealization";
    case ErrorCode::DegenerateMotion: return "DegenerateMotion";
    case ErrorCode::SeedNotOnCurve: return "SeedNotOnCurve";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::StepFailure: return "StepFailure";
    case ErrorCode::UnderConstrained: return "UnderConstrained";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace sphflex
