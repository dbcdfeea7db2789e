#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkrank {

enum class ErrorCode {
  DuplicateOption,
  SelfPair,
  Conflict,
  Incomplete,
  UnknownOption,
  EmptyTournament,
  OptionSetMismatch,
  SyntaxError,
  NotSquare,
  NonPositiveEntry,
  DiagonalNotOne,
  ReciprocityViolation,
  TiedComparison,
  NoConvergence,
  TiedWeights,
  MalformedGame,
  UnknownPlayer,
  TiedOutcomes,
  SameLoop,
  InvalidStyle,
  UnreadableInput,
};

std::string_view to_string(ErrorCode code);

// Every validation failure in the library is reported through this type.
// what() is prefixed with the error code name, e.g. "Incomplete: ...".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linkrank
