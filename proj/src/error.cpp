#include "treeperm/error.hpp"

namespace treeperm {

const char* name_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::DuplicateChild: return "DuplicateChild";
    case ErrorCode::NoUniqueRoot: return "NoUniqueRoot";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::NodeNotFound: return "NodeNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StyleArityMismatch: return "StyleArityMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::InternalCorruption: return "InternalCorruption";
  }
  return "UnknownError";
}

}  // namespace treeperm
