#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tkdesign/design_model.hpp"

namespace tkdesign {

// Generated Tkinter source, one entry per line without terminators.
struct SourceText {
  std::vector<std::string> lines;

  // LF-terminated lines.
  std::string str() const;

  friend bool operator==(const SourceText&, const SourceText&) = default;
};

SourceText split_lines(std::string_view text);

// Compiles the document to a runnable Tkinter module. Sections, in order:
// imports and window setup, handler stubs, menu bar, widgets (a constructor
// line and a place line each, creation order), bind statements, main loop.
// Deterministic: the same document always yields the same bytes.
SourceText generate(const DesignDocument& doc);

// Constructor line plus placement line for one widget. Properties are listed
// alphabetically and only when they differ from their defaults.
std::vector<std::string> generate_widget(const Widget& widget);

// Rebuilds a document from generate() output. Submenu serials are renumbered
// from 1 and the deleted-serial log is empty; name counters are set from the
// auto-style names present. Throws Parse with the offending line.
DesignDocument parse_generated(std::string_view source);

// Equality modulo what the generated source cannot carry: name counters, the
// retired-submenu log, submenu serial numbers and the menu row baseline. A
// menu with no live submenus equals no menu.
bool round_trip_equal(const DesignDocument& a, const DesignDocument& b);

}  // namespace tkdesign
