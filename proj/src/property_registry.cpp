#include "tkdesign/property_registry.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "tkdesign/errors.hpp"
#include "tkdesign/identifiers.hpp"

namespace tkdesign {

namespace detail {
extern const std::string_view kCapabilityFixture;
}

namespace {

PropertyDescriptor text(std::string name) {
  return {std::move(name), ValueType::Text, std::string{}, PropertySlot::Free, {}, 0};
}
PropertyDescriptor color(std::string name) {
  return {std::move(name), ValueType::Color, std::string{}, PropertySlot::Free, {}, 0};
}
PropertyDescriptor integer(std::string name, int def, int min,
                           PropertySlot slot = PropertySlot::Free) {
  return {std::move(name), ValueType::Integer, def, slot, {}, min};
}
PropertyDescriptor enumeration(std::string name, std::vector<std::string> values) {
  std::string def = values.front();
  return {std::move(name), ValueType::Enum, def, PropertySlot::Free, std::move(values), 0};
}

// Types and defaults for every property the registry can carry. Fixture rows
// select from this table; order here is irrelevant.
std::vector<PropertyDescriptor> known_descriptors() {
  return {
      integer("x0", 0, 0, PropertySlot::X0),
      integer("y0", 0, 0, PropertySlot::Y0),
      {"name", ValueType::Identifier, std::string{}, PropertySlot::Name, {}, 0},
      {"container", ValueType::Identifier, std::string{"self"}, PropertySlot::Container, {}, 0},
      text("anchor"),
      text("cursor"),
      text("font"),
      text("bitmap"),
      text("justify"),
      text("image"),
      integer("width", 1, 1, PropertySlot::Width),
      integer("height", 1, 1, PropertySlot::Height),
      color("foreground"),
      color("background"),
      integer("padx", 0, 0),
      integer("pady", 0, 0),
      enumeration("relief", {"flat", "raised", "sunken", "groove", "ridge"}),
      text("text"),
      enumeration("state", {"normal", "disabled"}),
      {"takefocus", ValueType::Boolean, false, PropertySlot::Free, {}, 0},
      color("highlightcolor"),
      color("highlightbackground"),
      {"command", ValueType::Identifier, std::string{}, PropertySlot::Command, {}, 0},
      integer("length", 100, 1),
  };
}

std::optional<PropertyDescriptor> find_known(std::string_view name) {
  for (auto& d : known_descriptors()) {
    if (d.name == name) return d;
  }
  return std::nullopt;
}

[[noreturn]] void format_error(int line, const std::string& message) {
  throw Error(ErrorCode::Format,
              "capability fixture line " + std::to_string(line) + ": " + message,
              {}, line);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

std::string_view to_string(ValueType type) noexcept {
  switch (type) {
    case ValueType::Text: return "text";
    case ValueType::Integer: return "integer";
    case ValueType::Color: return "color";
    case ValueType::Enum: return "enum";
    case ValueType::Boolean: return "boolean";
    case ValueType::Identifier: return "identifier";
  }
  return "text";
}

std::string format_value(const PropertyValue& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return "\"" + *s + "\"";
  if (const auto* i = std::get_if<int>(&value)) return std::to_string(*i);
  return std::get<bool>(value) ? "true" : "false";
}

const PropertyRegistry& PropertyRegistry::standard() {
  static const PropertyRegistry registry = from_fixture(detail::kCapabilityFixture);
  return registry;
}

PropertyRegistry PropertyRegistry::from_fixture(std::string_view text) {
  PropertyRegistry reg;
  std::array<bool, 16> everywhere{};
  for (WidgetKind k : kRectKinds) everywhere[static_cast<std::size_t>(k)] = true;
  for (const char* name : {"x0", "y0", "name"}) {
    reg.descriptors_.push_back(*find_known(name));
    reg.matrix_.push_back(everywhere);
  }

  std::vector<WidgetKind> columns;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().starts_with("#")) continue;

    if (columns.empty()) {
      if (tokens.front() != "property") format_error(line_no, "expected header row");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto kind = parse_kind(tokens[i]);
        if (!kind || *kind == WidgetKind::Menu) {
          format_error(line_no, "unknown widget kind '" + tokens[i] + "'");
        }
        if (std::find(columns.begin(), columns.end(), *kind) != columns.end()) {
          format_error(line_no, "duplicate column '" + tokens[i] + "'");
        }
        columns.push_back(*kind);
      }
      if (columns.size() != kRectKinds.size()) {
        format_error(line_no, "header must list all 15 drawable kinds");
      }
      continue;
    }

    const std::string& prop = tokens.front();
    auto desc = find_known(prop);
    if (!desc || desc->slot == PropertySlot::X0 || desc->slot == PropertySlot::Y0 ||
        desc->slot == PropertySlot::Name) {
      format_error(line_no, "unknown or implicit property row '" + prop + "'");
    }
    if (reg.knows(prop)) format_error(line_no, "duplicate row '" + prop + "'");
    if (tokens.size() != columns.size() + 1) {
      format_error(line_no, "row '" + prop + "' needs " +
                                std::to_string(columns.size()) + " cells");
    }
    std::array<bool, 16> row{};
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& cell = tokens[i + 1];
      if (cell != "0" && cell != "1") {
        format_error(line_no, "cell must be 0 or 1, got '" + cell + "'");
      }
      row[static_cast<std::size_t>(columns[i])] = cell == "1";
    }
    if (desc->slot == PropertySlot::Container && row != everywhere) {
      format_error(line_no, "container must be supported by every kind");
    }
    reg.descriptors_.push_back(std::move(*desc));
    reg.matrix_.push_back(row);
  }
  if (columns.empty()) format_error(line_no, "missing header row");
  if (!reg.knows("container")) format_error(line_no, "missing container row");
  return reg;
}

bool PropertyRegistry::knows(std::string_view prop) const noexcept {
  return std::any_of(descriptors_.begin(), descriptors_.end(),
                     [&](const auto& d) { return d.name == prop; });
}

std::size_t PropertyRegistry::index_of(std::string_view prop) const {
  for (std::size_t i = 0; i < descriptors_.size(); ++i) {
    if (descriptors_[i].name == prop) return i;
  }
  throw Error(ErrorCode::UnknownProperty,
              "unknown property '" + std::string(prop) + "'");
}

const PropertyDescriptor& PropertyRegistry::descriptor(std::string_view prop) const {
  return descriptors_[index_of(prop)];
}

bool PropertyRegistry::supports(WidgetKind kind, std::string_view prop) const {
  return matrix_[index_of(prop)][static_cast<std::size_t>(kind)];
}

std::vector<PropertyDescriptor> PropertyRegistry::list_properties(WidgetKind kind) const {
  std::vector<PropertyDescriptor> out;
  for (std::size_t i = 0; i < descriptors_.size(); ++i) {
    if (matrix_[i][static_cast<std::size_t>(kind)]) out.push_back(descriptors_[i]);
  }
  return out;
}

void PropertyRegistry::check_value(std::string_view prop,
                                   const PropertyValue& value) const {
  const auto& d = descriptor(prop);
  auto mismatch = [&](const std::string& why) {
    throw Error(ErrorCode::TypeMismatch, "property '" + d.name + "' (" +
                                             std::string(to_string(d.type)) +
                                             "): " + why);
  };
  switch (d.type) {
    case ValueType::Integer: {
      const int* v = std::get_if<int>(&value);
      if (!v) mismatch("expected an integer, got " + format_value(value));
      if (*v < d.min_value) {
        mismatch("must be >= " + std::to_string(d.min_value) + ", got " +
                 std::to_string(*v));
      }
      return;
    }
    case ValueType::Boolean:
      if (!std::holds_alternative<bool>(value)) {
        mismatch("expected true or false, got " + format_value(value));
      }
      return;
    default:
      break;
  }
  const auto* s = std::get_if<std::string>(&value);
  if (!s) mismatch("expected a string, got " + format_value(value));
  if (!is_valid_utf8(*s)) mismatch("not valid UTF-8");
  switch (d.type) {
    case ValueType::Color:
      if (!s->empty() && !is_color(*s)) mismatch("not a color: " + format_value(value));
      break;
    case ValueType::Enum:
      if (std::find(d.enum_values.begin(), d.enum_values.end(), *s) ==
          d.enum_values.end()) {
        mismatch("not one of the allowed values: " + format_value(value));
      }
      break;
    case ValueType::Identifier:
      if (!is_identifier(*s)) mismatch("not an identifier: " + format_value(value));
      break;
    default:
      break;
  }
}

PropertyValue PropertyRegistry::parse_value(std::string_view prop,
                                            std::string_view token,
                                            bool quoted) const {
  const auto& d = descriptor(prop);
  PropertyValue value;
  if (d.type == ValueType::Integer) {
    int v = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (quoted || ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(ErrorCode::TypeMismatch, "property '" + d.name +
                                               "' expects an integer, got '" +
                                               std::string(token) + "'");
    }
    value = v;
  } else if (d.type == ValueType::Boolean) {
    if (quoted || (token != "true" && token != "false")) {
      throw Error(ErrorCode::TypeMismatch, "property '" + d.name +
                                               "' expects true or false, got '" +
                                               std::string(token) + "'");
    }
    value = token == "true";
  } else {
    value = std::string(token);
  }
  check_value(prop, value);
  return value;
}

}  // namespace tkdesign
