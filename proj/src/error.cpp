#include "qcube/error.hpp"

namespace qcube {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotRectagraph: return "NotRectagraph";
    case ErrorCode::QuadrangleAmbiguous: return "QuadrangleAmbiguous";
    case ErrorCode::InconsistentLift: return "InconsistentLift";
    case ErrorCode::NotCovering: return "NotCovering";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qcube
