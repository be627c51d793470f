#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tkdesign/widget_kind.hpp"

namespace tkdesign {

// text, color and enum values are strings; integers are pixels or counts.
using PropertyValue = std::variant<std::string, int, bool>;

enum class ValueType {
  Text,
  Integer,
  Color,  // "" means the toolkit default, otherwise see is_color()
  Enum,
  Boolean,
  Identifier,
};

// Where a property lives on a widget. Geometry, name, container and command
// are structural fields; everything else is kept in the widget's property map.
enum class PropertySlot { X0, Y0, Width, Height, Name, Container, Command, Free };

struct PropertyDescriptor {
  std::string name;
  ValueType type = ValueType::Text;
  PropertyValue default_value;
  PropertySlot slot = PropertySlot::Free;
  std::vector<std::string> enum_values;  // Enum only
  int min_value = 0;                     // Integer only

  friend bool operator==(const PropertyDescriptor&, const PropertyDescriptor&) = default;
};

std::string_view to_string(ValueType type) noexcept;
std::string format_value(const PropertyValue& value);

// The kind x property capability matrix plus the typed descriptor table.
// Immutable once built.
class PropertyRegistry {
 public:
  // Registry parsed from the capability fixture compiled into the library.
  static const PropertyRegistry& standard();

  // Parses a fixture in the capability_matrix.txt format. Throws Format.
  static PropertyRegistry from_fixture(std::string_view text);

  bool knows(std::string_view prop) const noexcept;

  // Throws UnknownProperty.
  const PropertyDescriptor& descriptor(std::string_view prop) const;

  // Throws UnknownProperty. Menu supports nothing.
  bool supports(WidgetKind kind, std::string_view prop) const;

  // Supported descriptors in registry order: x0, y0, name, then fixture rows.
  std::vector<PropertyDescriptor> list_properties(WidgetKind kind) const;

  std::span<const PropertyDescriptor> descriptors() const noexcept {
    return descriptors_;
  }

  // Throws TypeMismatch when the value's type or range is wrong.
  void check_value(std::string_view prop, const PropertyValue& value) const;

  // Converts a trace/CLI token to a typed value. Integers and booleans must
  // be unquoted. Throws TypeMismatch.
  PropertyValue parse_value(std::string_view prop, std::string_view token,
                            bool quoted) const;

 private:
  PropertyRegistry() = default;
  std::size_t index_of(std::string_view prop) const;

  std::vector<PropertyDescriptor> descriptors_;
  // one row per descriptor, indexed by WidgetKind
  std::vector<std::array<bool, 16>> matrix_;
};

}  // namespace tkdesign
