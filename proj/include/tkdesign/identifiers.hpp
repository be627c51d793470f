#pragma once

#include <string_view>

namespace tkdesign {

// [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(std::string_view text) noexcept;

// Identifiers the generated source already uses: Python keywords, the window
// object, the menu variables and the toolkit class names. Widget names and
// handler names may not take them.
bool is_reserved_identifier(std::string_view text) noexcept;

// "#rgb", "#rrggbb" or an alphabetic color name.
bool is_color(std::string_view text) noexcept;

// Well-formed UTF-8 (no overlongs, surrogates or code points past U+10FFFF).
// Every string a document stores must pass, so it can always be written out.
bool is_valid_utf8(std::string_view text) noexcept;

}  // namespace tkdesign
