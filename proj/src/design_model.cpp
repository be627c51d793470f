#include "tkdesign/design_model.hpp"

#include <algorithm>

#include "tkdesign/errors.hpp"
#include "tkdesign/identifiers.hpp"

namespace tkdesign {

namespace {

std::string rect_text(const Rect& r) {
  return "(" + std::to_string(r.x0) + "," + std::to_string(r.y0) + "," +
         std::to_string(r.width) + "," + std::to_string(r.height) + ")";
}

bool contains_name(std::span<const std::string> names, std::string_view name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

void WindowSettings::validate() const {
  auto extent_ok = [](int v) { return v >= 1 && v <= kMaxWindowExtent; };
  if (!extent_ok(width) || !extent_ok(height)) {
    throw Error(ErrorCode::Validation,
                "window size must be within 1.." + std::to_string(kMaxWindowExtent) +
                    " pixels, got " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  if (!is_valid_utf8(title)) {
    throw Error(ErrorCode::Validation, "window title is not valid UTF-8");
  }
  if (!is_color(background)) {
    throw Error(ErrorCode::Validation, "window background is not a color: \"" +
                                           background + "\"");
  }
}

bool is_bind_sequence(std::string_view trigger) noexcept {
  if (trigger.size() < 3 || trigger.front() != '<' || trigger.back() != '>') {
    return false;
  }
  auto inner = trigger.substr(1, trigger.size() - 2);
  return std::all_of(inner.begin(), inner.end(), [](char c) {
    return c > ' ' && c < 127 && c != '<' && c != '>' && c != '"' && c != '\\';
  });
}

const EventBinding* Widget::command() const noexcept {
  for (const auto& e : events) {
    if (e.is_command()) return &e;
  }
  return nullptr;
}

DesignDocument::DesignDocument(WindowSettings window) : window_(std::move(window)) {
  window_.validate();
}

void DesignDocument::set_window(WindowSettings window) {
  window.validate();
  for (const auto& w : widgets_) {
    if (w.rect.right() > window.width || w.rect.bottom() > window.height) {
      throw Error(ErrorCode::OutOfBounds,
                  w.name + " " + rect_text(w.rect) + " would not fit a " +
                      std::to_string(window.width) + "x" +
                      std::to_string(window.height) + " window",
                  {w.name});
    }
  }
  window_ = std::move(window);
}

const Widget* DesignDocument::find(std::string_view name) const noexcept {
  for (const auto& w : widgets_) {
    if (w.name == name) return &w;
  }
  return nullptr;
}

std::size_t DesignDocument::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < widgets_.size(); ++i) {
    if (widgets_[i].name == name) return i;
  }
  throw Error(ErrorCode::UnknownName, "no widget named '" + std::string(name) + "'",
              {std::string(name)});
}

const Widget& DesignDocument::widget(std::string_view name) const {
  return widgets_[index_of(name)];
}

Widget& DesignDocument::mutable_widget(std::string_view name) {
  return widgets_[index_of(name)];
}

bool DesignDocument::handler_in_use(std::string_view name) const {
  for (const auto& w : widgets_) {
    for (const auto& e : w.events) {
      if (e.handler == name) return true;
    }
  }
  return false;
}

void DesignDocument::check_name(const std::string& name) const {
  if (!is_identifier(name)) {
    throw Error(ErrorCode::Validation, "'" + name + "' is not a valid identifier",
                {name});
  }
  if (is_reserved_identifier(name)) {
    throw Error(ErrorCode::Validation, "'" + name + "' is reserved", {name});
  }
  if (find(name) != nullptr) {
    throw Error(ErrorCode::DuplicateName, "a widget named '" + name + "' already exists",
                {name});
  }
  if (handler_in_use(name)) {
    throw Error(ErrorCode::DuplicateName, "'" + name + "' is already an event handler",
                {name});
  }
}

void DesignDocument::check_fits(const Widget& w, ErrorCode code) const {
  const Rect& r = w.rect;
  if (r.x0 < 0 || r.y0 < 0 || r.right() > window_.width ||
      r.bottom() > window_.height) {
    throw Error(code,
                w.name + " " + rect_text(r) + " leaves the " +
                    std::to_string(window_.width) + "x" +
                    std::to_string(window_.height) + " canvas",
                {w.name});
  }
}

void DesignDocument::check_no_overlap(const Rect& rect, std::string_view name,
                                      std::span<const std::string> ignore,
                                      ErrorCode code) const {
  for (const auto& other : widgets_) {
    if (other.name == name || contains_name(ignore, other.name)) continue;
    if (rects_overlap(rect, other.rect)) {
      throw Error(code,
                  std::string(name) + " " + rect_text(rect) + " overlaps " +
                      other.name + " " + rect_text(other.rect),
                  {std::string(name), other.name});
    }
  }
}

void DesignDocument::check_container(const Widget& w, std::size_t position) const {
  if (w.container == "self") return;
  for (std::size_t i = 0; i < position && i < widgets_.size(); ++i) {
    const auto& c = widgets_[i];
    if (c.name != w.container || &c == &w) continue;
    if (!is_container_kind(c.kind)) {
      throw Error(ErrorCode::Validation,
                  w.container + " is a " + std::string(kind_name(c.kind)) +
                      " and cannot contain " + w.name,
                  {w.name, w.container});
    }
    return;
  }
  throw Error(ErrorCode::Validation,
              "container of " + w.name + " must be \"self\" or a Frame, LabelFrame "
              "or PanedWindow created before it; got '" + w.container + "'",
              {w.name, w.container});
}

void DesignDocument::add_widget(Widget w) {
  const auto& registry = PropertyRegistry::standard();
  if (w.kind == WidgetKind::Menu) {
    throw Error(ErrorCode::Validation, "Menu is edited through the menu model, not drawn");
  }
  check_name(w.name);
  if (w.rect.width < 1 || w.rect.height < 1) {
    throw Error(ErrorCode::Validation,
                w.name + " " + rect_text(w.rect) + " must have width and height >= 1",
                {w.name});
  }
  check_fits(w, ErrorCode::OutOfBounds);
  check_no_overlap(w.rect, w.name, {}, ErrorCode::Overlap);
  check_container(w, widgets_.size());

  std::map<std::string, PropertyValue, std::less<>> props;
  for (const auto& [prop, value] : w.properties) {
    const auto& d = registry.descriptor(prop);
    if (d.slot != PropertySlot::Free) {
      throw Error(ErrorCode::Validation,
                  "'" + prop + "' is a structural field, not a stored property",
                  {w.name});
    }
    if (!registry.supports(w.kind, prop)) {
      throw Error(ErrorCode::UnsupportedProperty,
                  std::string(kind_name(w.kind)) + " has no property '" + prop + "'",
                  {w.name});
    }
    registry.check_value(prop, value);
    if (value != d.default_value) props.emplace(prop, value);
  }
  w.properties = std::move(props);

  std::vector<EventBinding> events = std::move(w.events);
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (events[i].trigger == events[j].trigger) {
        throw Error(ErrorCode::Validation,
                    w.name + " binds '" + events[i].trigger + "' twice", {w.name});
      }
    }
  }
  w.events.clear();
  widgets_.push_back(std::move(w));
  try {
    for (auto& e : events) bind(widgets_.back().name, std::move(e));
  } catch (...) {
    widgets_.pop_back();
    throw;
  }
}

std::pair<std::string, int> DesignDocument::next_name(WidgetKind kind) const {
  if (kind == WidgetKind::Menu) {
    throw Error(ErrorCode::Validation, "Menu has no auto-named instances");
  }
  auto it = counters_.find(kind);
  int n = it == counters_.end() ? 0 : it->second;
  std::string name;
  do {
    ++n;
    name = std::string(kind_name(kind)) + std::to_string(n);
  } while (find(name) != nullptr || handler_in_use(name));
  return {name, n};
}

std::string DesignDocument::peek_auto_name(WidgetKind kind) const {
  return next_name(kind).first;
}

std::string DesignDocument::add_auto_named(Widget w) {
  auto [name, n] = next_name(w.kind);
  w.name = name;
  add_widget(std::move(w));
  counters_[widgets_.back().kind] = n;
  return name;
}

std::string DesignDocument::auto_name(WidgetKind kind) {
  auto [name, n] = next_name(kind);
  counters_[kind] = n;
  return name;
}

void DesignDocument::remove_widget(std::string_view name) {
  const std::size_t i = index_of(name);
  const std::string removed = widgets_[i].name;
  widgets_.erase(widgets_.begin() + static_cast<std::ptrdiff_t>(i));
  for (auto& w : widgets_) {
    if (w.container == removed) w.container = "self";
  }
}

void DesignDocument::translate(std::span<const std::string> names, int dx, int dy) {
  std::vector<std::size_t> moved;
  for (const auto& n : names) moved.push_back(index_of(n));
  for (std::size_t i : moved) {
    Widget probe = widgets_[i];
    probe.rect = probe.rect.translated(dx, dy);
    check_fits(probe, ErrorCode::MoveOutOfBounds);
    check_no_overlap(probe.rect, probe.name, names, ErrorCode::MoveCollision);
  }
  std::sort(moved.begin(), moved.end());
  moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
  for (std::size_t i : moved) widgets_[i].rect = widgets_[i].rect.translated(dx, dy);
}

void DesignDocument::set_rect(std::string_view name, const Rect& rect) {
  Widget& w = mutable_widget(name);
  if (rect.width < 1 || rect.height < 1) {
    throw Error(ErrorCode::Validation,
                w.name + " " + rect_text(rect) + " must have width and height >= 1",
                {w.name});
  }
  Widget probe = w;
  probe.rect = rect;
  check_fits(probe, ErrorCode::OutOfBounds);
  check_no_overlap(rect, w.name, {}, ErrorCode::Overlap);
  w.rect = rect;
}

void DesignDocument::rename(std::string_view name, const std::string& new_name) {
  Widget& w = mutable_widget(name);
  if (w.name == new_name) return;
  check_name(new_name);
  const std::string old = w.name;
  w.name = new_name;
  for (auto& other : widgets_) {
    if (other.container == old) other.container = new_name;
  }
}

void DesignDocument::set_container(std::string_view name, const std::string& container) {
  const std::size_t i = index_of(name);
  Widget probe = widgets_[i];
  probe.container = container;
  check_container(probe, i);
  widgets_[i].container = container;
}

void DesignDocument::set_free_property(std::string_view name, std::string_view prop,
                                       const PropertyValue& value) {
  const auto& registry = PropertyRegistry::standard();
  Widget& w = mutable_widget(name);
  const auto& d = registry.descriptor(prop);
  if (d.slot != PropertySlot::Free) {
    throw Error(ErrorCode::Validation,
                "'" + d.name + "' is a structural field, not a stored property",
                {w.name});
  }
  if (!registry.supports(w.kind, prop)) {
    throw Error(ErrorCode::UnsupportedProperty,
                std::string(kind_name(w.kind)) + " has no property '" + d.name + "'",
                {w.name});
  }
  registry.check_value(prop, value);
  if (value == d.default_value) {
    if (auto it = w.properties.find(prop); it != w.properties.end()) {
      w.properties.erase(it);
    }
  } else {
    w.properties.insert_or_assign(std::string(prop), value);
  }
}

void DesignDocument::bind(std::string_view name, EventBinding binding) {
  Widget& w = mutable_widget(name);
  if (binding.is_command()) {
    if (!PropertyRegistry::standard().supports(w.kind, "command")) {
      throw Error(ErrorCode::CommandUnsupported,
                  std::string(kind_name(w.kind)) + " " + w.name +
                      " has no command option; bind a sequence instead",
                  {w.name});
    }
  } else if (!is_bind_sequence(binding.trigger)) {
    throw Error(ErrorCode::Validation,
                "'" + binding.trigger + "' is neither \"command\" nor a <sequence>",
                {w.name});
  }
  const auto& h = binding.handler;
  if (!is_identifier(h) || is_reserved_identifier(h) || find(h) != nullptr) {
    throw Error(ErrorCode::BadHandlerName,
                "'" + h + "' cannot name a handler (must be an unreserved identifier "
                "that is not a widget name)",
                {w.name, h});
  }
  for (auto& e : w.events) {
    if (e.trigger == binding.trigger) {
      e.handler = std::move(binding.handler);
      return;
    }
  }
  if (binding.is_command()) {
    w.events.insert(w.events.begin(), std::move(binding));
  } else {
    w.events.push_back(std::move(binding));
  }
}

MenuModel& DesignDocument::ensure_menu() {
  if (!menu_) menu_.emplace();
  return *menu_;
}

void DesignDocument::set_name_counter(WidgetKind kind, int count) {
  if (kind == WidgetKind::Menu || count < 0) {
    throw Error(ErrorCode::Validation, "invalid name counter for " +
                                           std::string(kind_name(kind)));
  }
  if (count == 0) {
    counters_.erase(kind);
  } else {
    counters_[kind] = count;
  }
}

std::vector<std::string> DesignDocument::handlers() const {
  std::vector<std::string> out;
  for (const auto& w : widgets_) {
    for (const auto& e : w.events) {
      if (std::find(out.begin(), out.end(), e.handler) == out.end()) {
        out.push_back(e.handler);
      }
    }
  }
  return out;
}

bool pairwise_disjoint(const DesignDocument& doc) {
  auto ws = doc.widgets();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      if (rects_overlap(ws[i].rect, ws[j].rect)) return false;
    }
  }
  return true;
}

}  // namespace tkdesign
