#include "tkdesign/identifiers.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iterator>

namespace tkdesign {

namespace {

bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool hex_digit(char c) {
  return ascii_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

constexpr std::string_view kReserved[] = {
    // python keywords and constants
    "False", "None", "True", "and", "as", "assert", "async", "await", "break",
    "class", "continue", "def", "del", "elif", "else", "except", "finally",
    "for", "from", "global", "if", "import", "in", "is", "lambda", "nonlocal",
    "not", "or", "pass", "raise", "return", "try", "while", "with", "yield",
    // names the generated module binds or calls
    "self", "ttk", "Tk", "Menu", "event", "_menubar",
    // widget classes
    "Button", "Canvas", "Checkbutton", "Combobox", "Entry", "Frame", "Label",
    "LabelFrame", "Listbox", "Message", "PanedWindow", "Radiobutton", "Scale",
    "Spinbox", "Text",
    // builtins the generated code relies on
    "print", "tkinter", "mainloop", "super",
};

}  // namespace

bool is_identifier(std::string_view text) noexcept {
  if (text.empty()) return false;
  if (!(ascii_alpha(text[0]) || text[0] == '_')) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return ascii_alpha(c) || ascii_digit(c) || c == '_';
  });
}

bool is_reserved_identifier(std::string_view text) noexcept {
  if (std::find(std::begin(kReserved), std::end(kReserved), text) != std::end(kReserved)) {
    return true;
  }
  // submenu variables are _menu<n>
  if (text.size() > 5 && text.substr(0, 5) == "_menu") {
    return std::all_of(text.begin() + 5, text.end(), ascii_digit);
  }
  return false;
}

bool is_color(std::string_view text) noexcept {
  if (text.empty()) return false;
  if (text[0] == '#') {
    auto digits = text.substr(1);
    return (digits.size() == 3 || digits.size() == 6) &&
           std::all_of(digits.begin(), digits.end(), hex_digit);
  }
  return std::all_of(text.begin(), text.end(), ascii_alpha);
}

bool is_valid_utf8(std::string_view text) noexcept {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto c = static_cast<unsigned char>(text[i + k]);
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

}  // namespace tkdesign
