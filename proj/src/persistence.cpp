#include "tkdesign/persistence.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tkdesign/errors.hpp"

namespace tkdesign {

using Json = nlohmann::ordered_json;

namespace {

Json value_to_json(const PropertyValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<int>(&v)) return *i;
  return std::get<bool>(v);
}

Json item_to_json(const MenuItem& item) {
  Json j = Json::object();
  if (item.is_separator()) {
    j["separator"] = true;
  } else {
    j["label"] = item.label();
  }
  return j;
}

Json menu_to_json(const MenuModel& m) {
  Json submenus = Json::array();
  for (const auto& [serial, b] : m.buttons()) {
    Json items = Json::array();
    for (const auto& item : m.items(serial)) items.push_back(item_to_json(item));
    submenus.push_back({{"serial", serial},
                        {"title", b.title},
                        {"width", b.width},
                        {"items", std::move(items)}});
  }
  return {{"y0", m.y0()},
          {"last_serial", m.last_serial()},
          {"submenus", std::move(submenus)},
          {"deleted", m.deleted()}};
}

// --- reading ---------------------------------------------------------------

[[noreturn]] void shape_error(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::Format, "document " + where + ": " + why);
}

void check_keys(const Json& j, const std::string& where,
                std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) shape_error(where, "expected an object");
  for (auto key : required) {
    if (!j.contains(key)) shape_error(where, "missing key '" + std::string(key) + "'");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || k == key;
    for (auto k : optional) known = known || k == key;
    if (!known) shape_error(where, "unknown key '" + key + "'");
  }
}

const Json& field(const Json& j, std::string_view key) { return j.at(std::string(key)); }

std::string get_string(const Json& j, std::string_view key, const std::string& where) {
  const Json& v = field(j, key);
  if (!v.is_string()) shape_error(where, "'" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

int get_int(const Json& j, std::string_view key, const std::string& where) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    shape_error(where, "'" + std::string(key) + "' must be an integer");
  }
  const auto wide = v.get<long long>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
    shape_error(where, "'" + std::string(key) + "' is out of range");
  }
  return static_cast<int>(wide);
}

bool get_bool(const Json& j, std::string_view key, const std::string& where) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) shape_error(where, "'" + std::string(key) + "' must be true or false");
  return v.get<bool>();
}

const Json& get_array(const Json& j, std::string_view key, const std::string& where) {
  const Json& v = field(j, key);
  if (!v.is_array()) shape_error(where, "'" + std::string(key) + "' must be an array");
  return v;
}

// Runs a document mutation, reporting any rule it breaks as a validation
// failure of the loaded file.
template <typename F>
void validated(const std::string& where, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Format) throw;
    throw Error(ErrorCode::Validation,
                where + ": " + std::string(to_string(e.code())) + ": " + e.what(),
                e.subjects());
  }
}

PropertyValue json_to_value(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) {
    const auto wide = v.get<long long>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
      shape_error(where, "value out of range");
    }
    return static_cast<int>(wide);
  }
  shape_error(where, "property values must be strings, integers or booleans");
}

WindowSettings read_window(const Json& j) {
  const std::string where = "window";
  check_keys(j, where,
             {"title", "width", "height", "background", "resizable_x", "resizable_y"});
  WindowSettings w;
  w.title = get_string(j, "title", where);
  w.width = get_int(j, "width", where);
  w.height = get_int(j, "height", where);
  w.background = get_string(j, "background", where);
  w.resizable_x = get_bool(j, "resizable_x", where);
  w.resizable_y = get_bool(j, "resizable_y", where);
  validated(where, [&] { w.validate(); });
  return w;
}

Widget read_widget(const Json& j, std::size_t index) {
  std::string where = "widgets[" + std::to_string(index) + "]";
  check_keys(j, where,
             {"name", "kind", "container", "x0", "y0", "width", "height", "properties"});
  Widget w;
  w.name = get_string(j, "name", where);
  where += " (" + w.name + ")";
  const std::string kind = get_string(j, "kind", where);
  auto parsed = parse_kind(kind);
  if (!parsed) shape_error(where, "unknown kind '" + kind + "'");
  w.kind = *parsed;
  w.container = get_string(j, "container", where);
  w.rect = {get_int(j, "x0", where), get_int(j, "y0", where), get_int(j, "width", where),
            get_int(j, "height", where)};
  const Json& props = field(j, "properties");
  if (!props.is_object()) shape_error(where, "'properties' must be an object");
  const auto& registry = PropertyRegistry::standard();
  for (const auto& [prop, value] : props.items()) {
    if (!registry.knows(prop)) {
      throw Error(ErrorCode::Validation,
                  where + ": unknown property '" + prop + "'", {w.name});
    }
    w.properties.emplace(prop, json_to_value(value, where + " property " + prop));
  }
  return w;
}

MenuModel read_menu(const Json& j) {
  const std::string where = "menu";
  check_keys(j, where, {"y0", "last_serial", "submenus", "deleted"});
  std::vector<SubmenuButton> buttons;
  std::map<int, std::vector<MenuItem>> items;
  const Json& subs = get_array(j, "submenus", where);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string sw = "menu.submenus[" + std::to_string(i) + "]";
    check_keys(subs[i], sw, {"serial", "title", "width", "items"});
    SubmenuButton b{get_int(subs[i], "serial", sw), get_string(subs[i], "title", sw),
                    get_int(subs[i], "width", sw)};
    if (!buttons.empty() && b.serial <= buttons.back().serial) {
      throw Error(ErrorCode::Validation, sw + ": submenus must be in ascending serial order");
    }
    std::vector<MenuItem> list;
    const Json& arr = get_array(subs[i], "items", sw);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string iw = sw + ".items[" + std::to_string(k) + "]";
      if (!arr[k].is_object()) shape_error(iw, "expected an object");
      if (arr[k].contains("separator")) {
        check_keys(arr[k], iw, {"separator"});
        if (!get_bool(arr[k], "separator", iw)) shape_error(iw, "'separator' must be true");
        list.push_back(MenuItem::separator());
      } else {
        check_keys(arr[k], iw, {"label"});
        list.push_back(MenuItem::command(get_string(arr[k], "label", iw)));
      }
    }
    items.emplace(b.serial, std::move(list));
    buttons.push_back(std::move(b));
  }
  std::vector<int> deleted;
  const Json& del = get_array(j, "deleted", where);
  for (std::size_t i = 0; i < del.size(); ++i) {
    if (!del[i].is_number_integer()) shape_error("menu.deleted", "serials must be integers");
    deleted.push_back(del[i].get<int>());
  }
  return MenuModel::restore(get_int(j, "y0", where), get_int(j, "last_serial", where),
                            std::move(buttons), std::move(items), std::move(deleted));
}

}  // namespace

std::string serialize(const DesignDocument& doc) {
  const auto& win = doc.window();
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["window"] = {{"title", win.title},
                 {"width", win.width},
                 {"height", win.height},
                 {"background", win.background},
                 {"resizable_x", win.resizable_x},
                 {"resizable_y", win.resizable_y}};
  Json widgets = Json::array();
  Json bindings = Json::array();
  for (const auto& w : doc.widgets()) {
    Json props = Json::object();
    for (const auto& [k, v] : w.properties) props[k] = value_to_json(v);
    widgets.push_back({{"name", w.name},
                       {"kind", std::string(kind_name(w.kind))},
                       {"container", w.container},
                       {"x0", w.rect.x0},
                       {"y0", w.rect.y0},
                       {"width", w.rect.width},
                       {"height", w.rect.height},
                       {"properties", std::move(props)}});
    for (const auto& e : w.events) {
      bindings.push_back({{"widget", w.name}, {"trigger", e.trigger}, {"handler", e.handler}});
    }
  }
  j["widgets"] = std::move(widgets);
  j["bindings"] = std::move(bindings);
  j["menu"] = doc.menu() ? menu_to_json(*doc.menu()) : Json(nullptr);
  Json counters = Json::object();
  for (const auto& [kind, n] : doc.name_counters()) {
    counters[std::string(kind_name(kind))] = n;
  }
  j["name_counters"] = std::move(counters);
  // ensure_ascii=false keeps UTF-8 titles readable; the output is still
  // deterministic.
  return j.dump(2) + "\n";
}

DesignDocument deserialize(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Format, std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) shape_error("root", "expected an object");
  if (!j.contains("format_version")) shape_error("root", "missing key 'format_version'");
  const Json& version = j["format_version"];
  if (!version.is_number_integer()) shape_error("root", "'format_version' must be an integer");
  if (version.get<long long>() != kFormatVersion) {
    throw Error(ErrorCode::Version, "unsupported format_version " + version.dump() +
                                        " (this build reads version " +
                                        std::to_string(kFormatVersion) + ")");
  }
  check_keys(j, "root",
             {"format_version", "window", "widgets", "bindings", "menu", "name_counters"});

  DesignDocument doc(read_window(j["window"]));
  const Json& widgets = get_array(j, "widgets", "root");
  for (std::size_t i = 0; i < widgets.size(); ++i) {
    Widget w = read_widget(widgets[i], i);
    const std::string where = "widgets[" + std::to_string(i) + "] (" + w.name + ")";
    validated(where, [&] { doc.add_widget(std::move(w)); });
  }

  const Json& bindings = get_array(j, "bindings", "root");
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    const std::string where = "bindings[" + std::to_string(i) + "]";
    check_keys(bindings[i], where, {"widget", "trigger", "handler"});
    std::string widget = get_string(bindings[i], "widget", where);
    EventBinding b{get_string(bindings[i], "trigger", where),
                   get_string(bindings[i], "handler", where)};
    if (!seen.emplace(widget, b.trigger).second) {
      throw Error(ErrorCode::Validation,
                  where + ": " + widget + " binds '" + b.trigger + "' twice", {widget});
    }
    validated(where, [&] { doc.bind(widget, std::move(b)); });
  }

  const Json& menu = j["menu"];
  if (!menu.is_null()) {
    std::optional<MenuModel> m;
    validated("menu", [&] { m = read_menu(menu); });
    doc.set_menu(std::move(m));
  }

  const Json& counters = j["name_counters"];
  if (!counters.is_object()) shape_error("name_counters", "expected an object");
  for (const auto& [kind_text, n] : counters.items()) {
    auto kind = parse_kind(kind_text);
    if (!kind) shape_error("name_counters", "unknown kind '" + kind_text + "'");
    if (!n.is_number_integer()) shape_error("name_counters", "counts must be integers");
    validated("name_counters", [&] { doc.set_name_counter(*kind, n.get<int>()); });
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "error reading '" + path.string() + "'");
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorCode::Io, "error writing '" + path.string() + "'");
}

void save(const DesignDocument& doc, const std::filesystem::path& path) {
  write_text_file(path, serialize(doc));
}

DesignDocument load(const std::filesystem::path& path) {
  return deserialize(read_text_file(path));
}

InteractionTrace load_trace(const std::filesystem::path& path) {
  return parse_trace(read_text_file(path));
}

}  // namespace tkdesign
