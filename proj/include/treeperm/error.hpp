#ifndef TREEPERM_ERROR_HPP
#define TREEPERM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeperm {

enum class ErrorCode {
  InvalidShape,
  InvalidPermutation,
  WrongLength,
  LabelOutOfRange,
  DuplicateChild,
  NoUniqueRoot,
  CycleDetected,
  InvalidTree,
  NodeNotFound,
  ParseError,
  StyleArityMismatch,
  TooLarge,
  RankOutOfRange,
  InternalCorruption,
};

const char* name_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a textual input; `offset` is the byte position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::ParseError,
              message + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace treeperm

#endif  // TREEPERM_ERROR_HPP
