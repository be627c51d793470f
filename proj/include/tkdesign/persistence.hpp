#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tkdesign/design_model.hpp"
#include "tkdesign/trace.hpp"

namespace tkdesign {

inline constexpr int kFormatVersion = 1;

// Canonical JSON text of the document: fixed key order, two-space indent,
// trailing newline. Equal documents serialize to equal bytes.
std::string serialize(const DesignDocument& doc);

// Parses and fully re-validates a document. Throws Format (malformed JSON or
// schema shape), Version (format_version other than 1) or Validation (a
// document rule is broken; subjects name the widgets involved).
DesignDocument deserialize(std::string_view text);

// Throw Io when the file cannot be written or read, otherwise as above.
void save(const DesignDocument& doc, const std::filesystem::path& path);
DesignDocument load(const std::filesystem::path& path);

// Reads a whole file. Throws Io.
std::string read_text_file(const std::filesystem::path& path);
// Writes atomically enough for a CLI: to path, truncating. Throws Io.
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Throws Io or TraceParse.
InteractionTrace load_trace(const std::filesystem::path& path);

}  // namespace tkdesign
