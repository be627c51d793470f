#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace tkdesign {

enum class WidgetKind {
  Button,
  Canvas,
  Checkbutton,
  Combobox,
  Entry,
  Frame,
  Label,
  LabelFrame,
  Listbox,
  Message,
  PanedWindow,
  Radiobutton,
  Scale,
  Spinbox,
  Text,
  Menu,  // edited through the menu model, never drawn as a rect
};

// The fifteen kinds that occupy a rectangle on the canvas.
inline constexpr std::array<WidgetKind, 15> kRectKinds = {
    WidgetKind::Button,      WidgetKind::Canvas,      WidgetKind::Checkbutton,
    WidgetKind::Combobox,    WidgetKind::Entry,       WidgetKind::Frame,
    WidgetKind::Label,       WidgetKind::LabelFrame,  WidgetKind::Listbox,
    WidgetKind::Message,     WidgetKind::PanedWindow, WidgetKind::Radiobutton,
    WidgetKind::Scale,       WidgetKind::Spinbox,     WidgetKind::Text,
};

std::string_view kind_name(WidgetKind kind) noexcept;
std::optional<WidgetKind> parse_kind(std::string_view name) noexcept;

// Constructor expression in generated code, e.g. "Button" or "ttk.Combobox".
std::string_view tk_class(WidgetKind kind) noexcept;
std::optional<WidgetKind> kind_from_tk_class(std::string_view cls) noexcept;

// Kinds that may be named as another widget's container.
bool is_container_kind(WidgetKind kind) noexcept;

struct Size {
  int width = 0;
  int height = 0;
};

// Size used when a draw gesture has no extent along an axis.
Size prototype_size(WidgetKind kind) noexcept;

}  // namespace tkdesign
