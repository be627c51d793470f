#include "tkdesign/errors.hpp"

namespace tkdesign {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::Overlap: return "OverlapError";
    case ErrorCode::DuplicateName: return "DuplicateNameError";
    case ErrorCode::OutOfBounds: return "OutOfBoundsError";
    case ErrorCode::UnknownName: return "UnknownNameError";
    case ErrorCode::PointOutsideCanvas: return "PointOutsideCanvas";
    case ErrorCode::MenuNotDrawable: return "MenuNotDrawable";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::MoveCollision: return "MoveCollisionError";
    case ErrorCode::MoveOutOfBounds: return "MoveOutOfBoundsError";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::TraceParse: return "TraceParseError";
    case ErrorCode::InvalidWidth: return "InvalidWidth";
    case ErrorCode::UnknownSerial: return "UnknownSerial";
    case ErrorCode::AlreadyDeleted: return "AlreadyDeleted";
    case ErrorCode::DeletedSubmenu: return "DeletedSubmenu";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::UnsupportedProperty: return "UnsupportedProperty";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::CommandUnsupported: return "CommandUnsupported";
    case ErrorCode::BadHandlerName: return "BadHandlerName";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Format: return "FormatError";
    case ErrorCode::Version: return "VersionError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::string> subjects, std::optional<int> line)
    : std::runtime_error(message),
      code_(code),
      subjects_(std::move(subjects)),
      line_(line) {}

ReplayError::ReplayError(const Error& cause, std::size_t command_index,
                         int trace_line)
    : Error(cause.code(),
            "command " + std::to_string(command_index) + " (line " +
                std::to_string(trace_line) + "): " + cause.what(),
            cause.subjects(), trace_line),
      command_index_(command_index) {}

}  // namespace tkdesign
