#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tkdesign {

enum class ErrorCode {
  // design document
  Validation,
  Overlap,
  DuplicateName,
  OutOfBounds,
  UnknownName,
  // interaction
  PointOutsideCanvas,
  MenuNotDrawable,
  EmptySelection,
  MoveCollision,
  MoveOutOfBounds,
  InvalidState,
  TraceParse,
  // menu
  InvalidWidth,
  UnknownSerial,
  AlreadyDeleted,
  DeletedSubmenu,
  IndexOutOfRange,
  // properties
  UnknownProperty,
  UnsupportedProperty,
  TypeMismatch,
  CommandUnsupported,
  BadHandlerName,
  // codegen / persistence
  Parse,
  Io,
  Format,
  Version,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every engine failure is reported through this one exception type; callers
// branch on code(). subjects() carries the identifiers the failure concerns,
// e.g. both widget names of an overlap.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> subjects = {},
        std::optional<int> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& subjects() const noexcept { return subjects_; }
  // 1-based source line for parse-type failures.
  std::optional<int> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::vector<std::string> subjects_;
  std::optional<int> line_;
};

// A failure raised while replaying a trace; wraps the engine error with the
// 0-based index of the failing command.
class ReplayError : public Error {
 public:
  ReplayError(const Error& cause, std::size_t command_index, int trace_line);

  std::size_t command_index() const noexcept { return command_index_; }

 private:
  std::size_t command_index_;
};

}  // namespace tkdesign
