#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minperm {

enum class ErrorCode {
  NotAGroup,
  OrderCapExceeded,
  InvalidPermutation,
  ActionNotHomomorphism,
  ActionNotAutomorphism,
  NotAbelianNormalFactor,
  LatticeCapExceeded,
  DimensionInconsistency,
  NotCodimOne,
  CodimTooSmall,
  NotSocleFriendly,
  InternalInvariantViolation,
  BranchCapExceeded,
  OracleCapExceeded,
  ParseError,
  ParameterOutOfRange,
  UnsupportedParameter,
  MissingTables,
  NonCoprime,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// 2 for resource caps, 3 for failed properties, 4 for bad input.
int exit_code_for(ErrorCode code);

}  // namespace minperm
