#include "minperm/error.hpp"

namespace minperm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorCode::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case ErrorCode::NotAbelianNormalFactor: return "NotAbelianNormalFactor";
    case ErrorCode::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorCode::DimensionInconsistency: return "DimensionInconsistency";
    case ErrorCode::NotCodimOne: return "NotCodimOne";
    case ErrorCode::CodimTooSmall: return "CodimTooSmall";
    case ErrorCode::NotSocleFriendly: return "NotSocleFriendly";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::BranchCapExceeded: return "BranchCapExceeded";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::MissingTables: return "MissingTables";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::LatticeCapExceeded:
    case ErrorCode::BranchCapExceeded:
    case ErrorCode::OracleCapExceeded:
      return 2;
    case ErrorCode::DimensionInconsistency:
    case ErrorCode::InternalInvariantViolation:
      return 3;
    default:
      return 4;
  }
}

}  // namespace minperm
