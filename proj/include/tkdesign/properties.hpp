#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tkdesign/design_model.hpp"
#include "tkdesign/property_registry.hpp"

namespace tkdesign {

// Emitted once per successful set_property so views can refresh.
struct ChangeEvent {
  std::string widget;  // name before the change
  std::string property;
  PropertyValue old_value;
  PropertyValue new_value;

  friend bool operator==(const ChangeEvent&, const ChangeEvent&) = default;
};

// Observers run synchronously, in subscription order, on the writer's thread.
class ChangeNotifier {
 public:
  using Observer = std::function<void(const ChangeEvent&)>;

  int subscribe(Observer observer);
  void unsubscribe(int id);
  void notify(const ChangeEvent& event) const;

 private:
  std::vector<std::pair<int, Observer>> observers_;
  int next_id_ = 1;
};

// Capability lookup against the standard registry. Throws UnknownProperty.
bool supports(WidgetKind kind, std::string_view prop);
std::vector<PropertyDescriptor> list_properties(WidgetKind kind);

// Current value or the descriptor default. x0/y0/width/height come from the
// rect, name/container from the widget, command from its command binding.
// Throws UnknownName, UnknownProperty, UnsupportedProperty.
PropertyValue get_property(const DesignDocument& doc, std::string_view widget,
                           std::string_view prop);

// Validates and stores the value, then notifies. Geometry changes are checked
// for bounds and overlap, renames for uniqueness. On failure nothing changes
// and nothing is emitted.
ChangeEvent set_property(DesignDocument& doc, std::string_view widget,
                         std::string_view prop, const PropertyValue& value,
                         const ChangeNotifier* notifier = nullptr);

// trigger is "command" or a "<sequence>"; rebinding a trigger replaces its
// handler.
void bind_event(DesignDocument& doc, std::string_view widget, std::string trigger,
                std::string handler);

}  // namespace tkdesign
