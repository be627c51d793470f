#include "tkdesign/widget_kind.hpp"

namespace tkdesign {

namespace {

struct KindInfo {
  WidgetKind kind;
  std::string_view name;
  std::string_view tk_class;
};

constexpr std::array<KindInfo, 16> kKinds = {{
    {WidgetKind::Button, "Button", "Button"},
    {WidgetKind::Canvas, "Canvas", "Canvas"},
    {WidgetKind::Checkbutton, "Checkbutton", "Checkbutton"},
    {WidgetKind::Combobox, "Combobox", "ttk.Combobox"},
    {WidgetKind::Entry, "Entry", "Entry"},
    {WidgetKind::Frame, "Frame", "Frame"},
    {WidgetKind::Label, "Label", "Label"},
    {WidgetKind::LabelFrame, "LabelFrame", "LabelFrame"},
    {WidgetKind::Listbox, "Listbox", "Listbox"},
    {WidgetKind::Message, "Message", "Message"},
    {WidgetKind::PanedWindow, "PanedWindow", "PanedWindow"},
    {WidgetKind::Radiobutton, "Radiobutton", "Radiobutton"},
    {WidgetKind::Scale, "Scale", "Scale"},
    {WidgetKind::Spinbox, "Spinbox", "Spinbox"},
    {WidgetKind::Text, "Text", "Text"},
    {WidgetKind::Menu, "Menu", "Menu"},
}};

const KindInfo& info(WidgetKind kind) noexcept {
  return kKinds[static_cast<std::size_t>(kind)];
}

}  // namespace

std::string_view kind_name(WidgetKind kind) noexcept { return info(kind).name; }

std::optional<WidgetKind> parse_kind(std::string_view name) noexcept {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

std::string_view tk_class(WidgetKind kind) noexcept { return info(kind).tk_class; }

std::optional<WidgetKind> kind_from_tk_class(std::string_view cls) noexcept {
  for (const auto& k : kKinds) {
    if (k.kind != WidgetKind::Menu && k.tk_class == cls) return k.kind;
  }
  return std::nullopt;
}

bool is_container_kind(WidgetKind kind) noexcept {
  return kind == WidgetKind::Frame || kind == WidgetKind::LabelFrame ||
         kind == WidgetKind::PanedWindow;
}

Size prototype_size(WidgetKind kind) noexcept {
  switch (kind) {
    case WidgetKind::Canvas:
    case WidgetKind::Frame:
    case WidgetKind::LabelFrame:
    case WidgetKind::PanedWindow:
    case WidgetKind::Listbox:
    case WidgetKind::Text:
      return {120, 80};
    default:
      return {80, 24};
  }
}

}  // namespace tkdesign
