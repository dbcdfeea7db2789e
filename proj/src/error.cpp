#include "linkrank/error.hpp"

namespace linkrank {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateOption: return "DuplicateOption";
    case ErrorCode::SelfPair: return "SelfPair";
    case ErrorCode::Conflict: return "Conflict";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::UnknownOption: return "UnknownOption";
    case ErrorCode::EmptyTournament: return "EmptyTournament";
    case ErrorCode::OptionSetMismatch: return "OptionSetMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::DiagonalNotOne: return "DiagonalNotOne";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::TiedComparison: return "TiedComparison";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TiedWeights: return "TiedWeights";
    case ErrorCode::MalformedGame: return "MalformedGame";
    case ErrorCode::UnknownPlayer: return "UnknownPlayer";
    case ErrorCode::TiedOutcomes: return "TiedOutcomes";
    case ErrorCode::SameLoop: return "SameLoop";
    case ErrorCode::InvalidStyle: return "InvalidStyle";
    case ErrorCode::UnreadableInput: return "UnreadableInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace linkrank
