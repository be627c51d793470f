#include "tkdesign/properties.hpp"

#include <algorithm>

#include "tkdesign/errors.hpp"

namespace tkdesign {

int ChangeNotifier::subscribe(Observer observer) {
  observers_.emplace_back(next_id_, std::move(observer));
  return next_id_++;
}

void ChangeNotifier::unsubscribe(int id) {
  std::erase_if(observers_, [id](const auto& o) { return o.first == id; });
}

void ChangeNotifier::notify(const ChangeEvent& event) const {
  for (const auto& [id, observer] : observers_) observer(event);
}

bool supports(WidgetKind kind, std::string_view prop) {
  return PropertyRegistry::standard().supports(kind, prop);
}

std::vector<PropertyDescriptor> list_properties(WidgetKind kind) {
  return PropertyRegistry::standard().list_properties(kind);
}

namespace {

const PropertyDescriptor& supported_descriptor(const Widget& w, std::string_view prop) {
  const auto& registry = PropertyRegistry::standard();
  const auto& d = registry.descriptor(prop);
  if (!registry.supports(w.kind, prop)) {
    throw Error(ErrorCode::UnsupportedProperty,
                std::string(kind_name(w.kind)) + " has no property '" + d.name + "'",
                {w.name});
  }
  return d;
}

}  // namespace

PropertyValue get_property(const DesignDocument& doc, std::string_view widget,
                           std::string_view prop) {
  const Widget& w = doc.widget(widget);
  const auto& d = supported_descriptor(w, prop);
  switch (d.slot) {
    case PropertySlot::X0: return w.rect.x0;
    case PropertySlot::Y0: return w.rect.y0;
    case PropertySlot::Width: return w.rect.width;
    case PropertySlot::Height: return w.rect.height;
    case PropertySlot::Name: return w.name;
    case PropertySlot::Container: return w.container;
    case PropertySlot::Command: {
      const auto* c = w.command();
      return c ? c->handler : std::string{};
    }
    case PropertySlot::Free: break;
  }
  if (auto it = w.properties.find(prop); it != w.properties.end()) return it->second;
  return d.default_value;
}

ChangeEvent set_property(DesignDocument& doc, std::string_view widget,
                         std::string_view prop, const PropertyValue& value,
                         const ChangeNotifier* notifier) {
  const Widget& w = doc.widget(widget);
  const auto& d = supported_descriptor(w, prop);
  PropertyRegistry::standard().check_value(prop, value);

  ChangeEvent event{w.name, d.name, get_property(doc, widget, prop), value};
  const std::string name = w.name;
  Rect rect = w.rect;
  switch (d.slot) {
    case PropertySlot::X0: rect.x0 = std::get<int>(value); doc.set_rect(name, rect); break;
    case PropertySlot::Y0: rect.y0 = std::get<int>(value); doc.set_rect(name, rect); break;
    case PropertySlot::Width: rect.width = std::get<int>(value); doc.set_rect(name, rect); break;
    case PropertySlot::Height: rect.height = std::get<int>(value); doc.set_rect(name, rect); break;
    case PropertySlot::Name: doc.rename(name, std::get<std::string>(value)); break;
    case PropertySlot::Container: doc.set_container(name, std::get<std::string>(value)); break;
    case PropertySlot::Command:
      doc.bind(name, {std::string(EventBinding::kCommand), std::get<std::string>(value)});
      break;
    case PropertySlot::Free: doc.set_free_property(name, prop, value); break;
  }
  if (notifier) notifier->notify(event);
  return event;
}

void bind_event(DesignDocument& doc, std::string_view widget, std::string trigger,
                std::string handler) {
  doc.bind(widget, {std::move(trigger), std::move(handler)});
}

}  // namespace tkdesign
