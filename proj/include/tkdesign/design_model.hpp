#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tkdesign/errors.hpp"
#include "tkdesign/geometry.hpp"
#include "tkdesign/menu_model.hpp"
#include "tkdesign/property_registry.hpp"
#include "tkdesign/widget_kind.hpp"

namespace tkdesign {

inline constexpr int kMaxWindowExtent = 100000;

struct WindowSettings {
  std::string title;
  int width = 400;
  int height = 300;
  std::string background = "white";
  bool resizable_x = true;
  bool resizable_y = true;

  // Throws Validation.
  void validate() const;

  friend bool operator==(const WindowSettings&, const WindowSettings&) = default;
};

struct EventBinding {
  static constexpr std::string_view kCommand = "command";

  std::string trigger;  // "command" or a bind sequence such as "<Button-1>"
  std::string handler;

  bool is_command() const noexcept { return trigger == kCommand; }

  friend bool operator==(const EventBinding&, const EventBinding&) = default;
};

// "<...>" with no quotes, spaces or nested brackets inside.
bool is_bind_sequence(std::string_view trigger) noexcept;

struct Widget {
  WidgetKind kind = WidgetKind::Button;
  std::string name;
  std::string container = "self";
  Rect rect;
  // Free (non-structural) properties whose value differs from the default.
  std::map<std::string, PropertyValue, std::less<>> properties;
  // The command binding, if any, comes first; bind sequences follow in the
  // order they were first bound.
  std::vector<EventBinding> events;

  const EventBinding* command() const noexcept;

  friend bool operator==(const Widget&, const Widget&) = default;
};

// The design being edited: window settings, widgets in creation order, the
// optional menu bar and per-kind naming counters.
//
// Every mutator either succeeds or throws with the document unchanged. The
// invariants it guards: widget rects lie inside the window, no two rects
// overlap with positive area, names are unique and not reserved, every stored
// property is supported by its widget's kind and type-valid, containers name
// an earlier Frame/LabelFrame/PanedWindow or "self".
class DesignDocument {
 public:
  DesignDocument() : DesignDocument(WindowSettings{}) {}
  explicit DesignDocument(WindowSettings window);

  const WindowSettings& window() const noexcept { return window_; }
  // Throws Validation, or OutOfBounds if an existing widget would not fit.
  void set_window(WindowSettings window);

  std::span<const Widget> widgets() const noexcept { return widgets_; }
  const Widget* find(std::string_view name) const noexcept;
  // Throws UnknownName.
  const Widget& widget(std::string_view name) const;

  // Throws Validation, DuplicateName, OutOfBounds, Overlap,
  // UnsupportedProperty or TypeMismatch.
  void add_widget(Widget w);

  // Next "<Kind><n>" name. The counter only grows; names already taken are
  // skipped.
  std::string auto_name(WidgetKind kind);
  // The name auto_name would return, without advancing the counter.
  std::string peek_auto_name(WidgetKind kind) const;
  // Names w automatically and adds it; the counter advances only on success.
  std::string add_auto_named(Widget w);

  // Removes the widget and its bindings. Widgets it contained fall back to
  // "self". Throws UnknownName.
  void remove_widget(std::string_view name);

  // Translates all named widgets together. Throws UnknownName,
  // MoveOutOfBounds or MoveCollision.
  void translate(std::span<const std::string> names, int dx, int dy);

  // Throws UnknownName, Validation (extent < 1), OutOfBounds or Overlap.
  void set_rect(std::string_view name, const Rect& rect);

  // Renames and rewrites references from contained widgets.
  // Throws UnknownName, Validation or DuplicateName.
  void rename(std::string_view name, const std::string& new_name);

  // Throws UnknownName or Validation.
  void set_container(std::string_view name, const std::string& container);

  // Stores a free property; storing the default removes the entry.
  // Throws UnknownName, UnknownProperty, UnsupportedProperty, TypeMismatch.
  void set_free_property(std::string_view name, std::string_view prop,
                         const PropertyValue& value);

  // Adds or replaces the binding for binding.trigger.
  // Throws UnknownName, CommandUnsupported, BadHandlerName, Validation.
  void bind(std::string_view name, EventBinding binding);

  const std::optional<MenuModel>& menu() const noexcept { return menu_; }
  MenuModel& ensure_menu();
  void set_menu(std::optional<MenuModel> menu) { menu_ = std::move(menu); }

  const std::map<WidgetKind, int>& name_counters() const noexcept { return counters_; }
  // Throws Validation for a negative count or the Menu kind.
  void set_name_counter(WidgetKind kind, int count);

  // Handler names in first-use order over widgets and their events.
  std::vector<std::string> handlers() const;

  friend bool operator==(const DesignDocument&, const DesignDocument&) = default;

 private:
  Widget& mutable_widget(std::string_view name);
  std::pair<std::string, int> next_name(WidgetKind kind) const;
  std::size_t index_of(std::string_view name) const;
  bool handler_in_use(std::string_view name) const;
  void check_fits(const Widget& w, ErrorCode code) const;
  void check_no_overlap(const Rect& rect, std::string_view name,
                        std::span<const std::string> ignore, ErrorCode code) const;
  void check_container(const Widget& w, std::size_t position) const;
  void check_name(const std::string& name) const;

  WindowSettings window_;
  std::vector<Widget> widgets_;
  std::optional<MenuModel> menu_;
  std::map<WidgetKind, int> counters_;
};

// True iff no two widget rects overlap (pairwise scan).
bool pairwise_disjoint(const DesignDocument& doc);

}  // namespace tkdesign
