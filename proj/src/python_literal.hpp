#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace tkdesign::detail {

// Double-quoted Python literal. Bytes >= 0x80 pass through so UTF-8 text
// stays readable; other control bytes become \xNN.
std::string python_string(std::string_view text);

// Reads a literal produced by python_string starting at text[pos] (the
// opening quote). Advances pos past the closing quote. nullopt on malformed
// input.
std::optional<std::string> read_python_string(std::string_view text, std::size_t& pos);

}  // namespace tkdesign::detail
