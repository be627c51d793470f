#include "tkdesign/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "python_literal.hpp"
#include "tkdesign/errors.hpp"
#include "tkdesign/identifiers.hpp"

namespace tkdesign {

using detail::python_string;

namespace {

constexpr std::string_view kImportLine = "from tkinter import *";
constexpr std::string_view kTtkImportLine = "from tkinter import ttk";
constexpr std::string_view kWindowLine = "self = Tk()";
constexpr std::string_view kMenuBarLine = "_menubar = Menu(self, tearoff=0)";
constexpr std::string_view kAttachMenuLine = "self.config(menu=_menubar)";
constexpr std::string_view kMainLoopLine = "self.mainloop()";
constexpr std::string_view kStubBody = "    pass";

std::string python_value(const PropertyValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return python_string(*s);
  if (const auto* i = std::get_if<int>(&v)) return std::to_string(*i);
  return std::get<bool>(v) ? "True" : "False";
}

// Numbered by position among the visible submenus, so the output does not
// depend on deleted-serial history.
std::string submenu_var(std::size_t position) { return "_menu" + std::to_string(position + 1); }

void emit_menu(const MenuModel& menu, std::vector<std::string>& out) {
  const auto visible = menu.visible_submenus();
  if (visible.empty()) return;
  out.emplace_back(kMenuBarLine);
  for (std::size_t k = 0; k < visible.size(); ++k) {
    const auto& sub = visible[k];
    const std::string var = submenu_var(k);
    out.push_back(var + " = Menu(_menubar, tearoff=0)");
    for (const auto& item : menu.items(sub.serial)) {
      if (item.is_separator()) {
        out.push_back(var + ".add_separator()");
      } else {
        out.push_back(var + ".add_command(label=" + python_string(item.label()) + ")");
      }
    }
    // The button width is design-time layout data; it rides along as a
    // trailing comment so the source can be read back.
    out.push_back("_menubar.add_cascade(label=" + python_string(sub.title) + ", menu=" +
                  var + ")  # width=" + std::to_string(sub.width));
  }
  out.emplace_back(kAttachMenuLine);
}

}  // namespace

std::string SourceText::str() const {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

SourceText split_lines(std::string_view text) {
  SourceText st;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      st.lines.emplace_back(text.substr(pos));
      break;
    }
    st.lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return st;
}

std::vector<std::string> generate_widget(const Widget& w) {
  const auto& registry = PropertyRegistry::standard();
  const bool sized = registry.supports(w.kind, "width") &&
                     registry.supports(w.kind, "height");

  std::map<std::string, std::string> args;
  if (sized) {
    args["width"] = std::to_string(w.rect.width);
    args["height"] = std::to_string(w.rect.height);
  }
  if (const auto* c = w.command()) args["command"] = c->handler;
  for (const auto& [prop, value] : w.properties) args[prop] = python_value(value);

  std::string ctor = w.name + " = " + std::string(tk_class(w.kind)) + "(" + w.container;
  for (const auto& [key, text] : args) ctor += ", " + key + "=" + text;
  ctor += ")";

  std::string place = w.name + ".place(x=" + std::to_string(w.rect.x0) +
                      ", y=" + std::to_string(w.rect.y0);
  if (!sized) {
    place += ", width=" + std::to_string(w.rect.width) +
             ", height=" + std::to_string(w.rect.height);
  }
  place += ")";
  return {std::move(ctor), std::move(place)};
}

SourceText generate(const DesignDocument& doc) {
  const auto& win = doc.window();
  SourceText st;
  auto& out = st.lines;
  out.emplace_back(kImportLine);
  out.emplace_back(kTtkImportLine);
  out.emplace_back();
  out.emplace_back(kWindowLine);
  out.push_back("self.title(" + python_string(win.title) + ")");
  out.push_back("self.geometry(\"" + std::to_string(win.width) + "x" +
                std::to_string(win.height) + "\")");
  out.push_back("self.configure(background=" + python_string(win.background) + ")");
  out.push_back(std::string("self.resizable(") + (win.resizable_x ? "True" : "False") +
                ", " + (win.resizable_y ? "True" : "False") + ")");
  out.emplace_back();

  const auto handlers = doc.handlers();
  if (!handlers.empty()) {
    for (const auto& h : handlers) {
      out.push_back("def " + h + "(event=None):");
      out.emplace_back(kStubBody);
    }
    out.emplace_back();
  }

  if (doc.menu() && !doc.menu()->visible_submenus().empty()) {
    emit_menu(*doc.menu(), out);
    out.emplace_back();
  }

  if (!doc.widgets().empty()) {
    for (const auto& w : doc.widgets()) {
      for (auto& line : generate_widget(w)) out.push_back(std::move(line));
    }
    out.emplace_back();
  }

  bool any_bind = false;
  for (const auto& w : doc.widgets()) {
    for (const auto& e : w.events) {
      if (e.is_command()) continue;
      out.push_back(w.name + ".bind(" + python_string(e.trigger) + ", " + e.handler + ")");
      any_bind = true;
    }
  }
  if (any_bind) out.emplace_back();

  out.emplace_back(kMainLoopLine);
  return st;
}

// ---------------------------------------------------------------------------
// Reading generated source back.

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view text, int line_no) : text_(text), line_(line_no) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse,
                "generated source line " + std::to_string(line_) + ": " + why +
                    " in '" + std::string(text_) + "'",
                {}, line_);
  }

  bool consume(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(std::string_view lit) {
    if (!consume(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::string identifier() {
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      ++end;
    }
    std::string id(text_.substr(pos_, end - pos_));
    if (!is_identifier(id)) fail("expected an identifier");
    pos_ = end;
    return id;
  }

  // Identifier possibly qualified with one dot, e.g. ttk.Combobox.
  std::string dotted() {
    std::string id = identifier();
    if (consume(".")) id += "." + identifier();
    return id;
  }

  int integer() {
    int v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [end, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ += static_cast<std::size_t>(end - first);
    return v;
  }

  std::string string_literal() {
    auto s = detail::read_python_string(text_, pos_);
    if (!s) fail("malformed string literal");
    return *s;
  }

  bool boolean() {
    if (consume("True")) return true;
    if (consume("False")) return false;
    fail("expected True or False");
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_end() const { return pos_ == text_.size(); }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }
  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

enum class Section { Prologue, Handlers, Menu, Widgets, Bindings, Epilogue };

struct PendingWidget {
  Widget widget;
  int line = 0;
  bool placed = false;
};

struct PendingBind {
  std::string widget;
  EventBinding binding;
  int line = 0;
};

struct PendingSubmenu {
  std::vector<MenuItem> items;
  bool attached = false;
};

class GeneratedParser {
 public:
  explicit GeneratedParser(std::string_view source) : lines_(split_lines(source).lines) {}

  DesignDocument run() {
    read_prologue();
    for (; index_ < lines_.size(); ++index_) read_line();
    if (!saw_mainloop_) fail_at(static_cast<int>(lines_.size()), "missing main loop");
    return build();
  }

 private:
  [[noreturn]] void fail_at(int line, const std::string& why) const {
    throw Error(ErrorCode::Parse,
                "generated source line " + std::to_string(line) + ": " + why, {}, line);
  }

  int line_no() const { return static_cast<int>(index_) + 1; }

  const std::string& next_line(std::string_view what) {
    if (index_ >= lines_.size()) fail_at(line_no(), "missing " + std::string(what));
    return lines_[index_++];
  }

  void expect_line(std::string_view exact) {
    const std::string& l = next_line(exact);
    if (l != exact) fail_at(line_no() - 1, "expected '" + std::string(exact) + "'");
  }

  void enter(Section s) {
    if (s < section_) fail_at(line_no(), "statement out of section order");
    section_ = s;
  }

  void read_prologue() {
    expect_line(kImportLine);
    expect_line(kTtkImportLine);
    expect_line("");
    expect_line(kWindowLine);
    {
      LineCursor c(next_line("window title"), line_no() - 1);
      c.expect("self.title(");
      window_.title = c.string_literal();
      c.expect(")");
      c.expect_end();
    }
    {
      LineCursor c(next_line("window geometry"), line_no() - 1);
      c.expect("self.geometry(\"");
      window_.width = c.integer();
      c.expect("x");
      window_.height = c.integer();
      c.expect("\")");
      c.expect_end();
    }
    {
      LineCursor c(next_line("window background"), line_no() - 1);
      c.expect("self.configure(background=");
      window_.background = c.string_literal();
      c.expect(")");
      c.expect_end();
    }
    {
      LineCursor c(next_line("window resizable flags"), line_no() - 1);
      c.expect("self.resizable(");
      window_.resizable_x = c.boolean();
      c.expect(", ");
      window_.resizable_y = c.boolean();
      c.expect(")");
      c.expect_end();
    }
    try {
      window_.validate();
    } catch (const Error& e) {
      fail_at(line_no() - 1, e.what());
    }
  }

  void read_line() {
    const std::string& text = lines_[index_];
    if (text.empty()) return;
    if (saw_mainloop_) fail_at(line_no(), "statement after the main loop");
    if (text == kMainLoopLine) {
      enter(Section::Epilogue);
      saw_mainloop_ = true;
      return;
    }
    if (text.starts_with("def ")) return read_stub();
    if (text == kMenuBarLine) {
      enter(Section::Menu);
      if (menu_started_) fail_at(line_no(), "second menu bar");
      menu_started_ = true;
      return;
    }
    if (text == kAttachMenuLine) {
      enter(Section::Menu);
      if (!menu_started_ || menu_attached_) fail_at(line_no(), "unexpected menu attach");
      menu_attached_ = true;
      return;
    }
    if (text.starts_with("_menubar.add_cascade(")) return read_cascade(text);
    if (text.starts_with("_menu")) return read_submenu_line(text);
    read_widget_line(text);
  }

  void read_stub() {
    enter(Section::Handlers);
    const int line = line_no();
    LineCursor c(lines_[index_], line);
    c.expect("def ");
    std::string name = c.identifier();
    c.expect("(event=None):");
    c.expect_end();
    ++index_;
    if (index_ >= lines_.size() || lines_[index_] != kStubBody) {
      fail_at(line + 1, "handler stub body must be 'pass'");
    }
    if (!stubs_.insert(name).second) fail_at(line, "duplicate handler stub " + name);
    stub_lines_[name] = line;
  }

  void read_cascade(const std::string& text) {
    enter(Section::Menu);
    if (!menu_started_ || menu_attached_) fail_at(line_no(), "cascade outside the menu bar");
    LineCursor c(text, line_no());
    c.expect("_menubar.add_cascade(label=");
    std::string title = c.string_literal();
    c.expect(", menu=");
    std::string var = c.identifier();
    c.expect(")  # width=");
    int width = c.integer();
    c.expect_end();
    auto it = submenus_.find(var);
    if (it == submenus_.end()) fail_at(line_no(), "cascade of undefined " + var);
    if (it->second.attached) fail_at(line_no(), var + " attached twice");
    it->second.attached = true;
    cascades_.push_back({std::move(title), width, var, line_no()});
  }

  void read_submenu_line(const std::string& text) {
    enter(Section::Menu);
    if (!menu_started_ || menu_attached_) fail_at(line_no(), "submenu outside the menu bar");
    LineCursor c(text, line_no());
    std::string var = c.identifier();
    if (!is_reserved_identifier(var) || var == "_menubar") {
      fail_at(line_no(), "unexpected statement");
    }
    if (c.consume(" = Menu(_menubar, tearoff=0)")) {
      c.expect_end();
      if (!submenus_.emplace(var, PendingSubmenu{}).second) {
        fail_at(line_no(), var + " defined twice");
      }
      return;
    }
    auto it = submenus_.find(var);
    if (it == submenus_.end()) fail_at(line_no(), "use of undefined " + var);
    if (it->second.attached) fail_at(line_no(), var + " edited after being attached");
    if (c.consume(".add_separator()")) {
      c.expect_end();
      it->second.items.push_back(MenuItem::separator());
      return;
    }
    c.expect(".add_command(label=");
    std::string label = c.string_literal();
    c.expect(")");
    c.expect_end();
    it->second.items.push_back(MenuItem::command(std::move(label)));
  }

  void read_widget_line(const std::string& text) {
    LineCursor c(text, line_no());
    std::string name = c.identifier();
    if (c.consume(" = ")) return read_constructor(c, std::move(name));
    if (c.consume(".place(")) return read_place(c, name);
    if (c.consume(".bind(")) return read_bind(c, std::move(name));
    c.fail("unrecognized statement");
  }

  PropertyValue read_value(LineCursor& c, const PropertyDescriptor& d) {
    switch (d.type) {
      case ValueType::Integer: return c.integer();
      case ValueType::Boolean: return c.boolean();
      default: return c.string_literal();
    }
  }

  void read_constructor(LineCursor& c, std::string name) {
    enter(Section::Widgets);
    if (!widgets_.empty() && !widgets_.back().placed) {
      fail_at(line_no(), widgets_.back().widget.name + " has no place line");
    }
    const std::string cls = c.dotted();
    auto kind = kind_from_tk_class(cls);
    if (!kind) c.fail("unknown widget class " + cls);
    Widget w;
    w.kind = *kind;
    w.name = std::move(name);
    c.expect("(");
    w.container = c.identifier();
    const auto& registry = PropertyRegistry::standard();
    std::string previous;
    while (c.consume(", ")) {
      std::string key = c.identifier();
      c.expect("=");
      if (!previous.empty() && key <= previous) c.fail("arguments out of order");
      previous = key;
      if (!registry.knows(key)) c.fail("unknown option " + key);
      const auto& d = registry.descriptor(key);
      switch (d.slot) {
        case PropertySlot::Width: w.rect.width = c.integer(); break;
        case PropertySlot::Height: w.rect.height = c.integer(); break;
        case PropertySlot::Command:
          w.events.push_back({std::string(EventBinding::kCommand), c.identifier()});
          break;
        case PropertySlot::Free: {
          PropertyValue v = read_value(c, d);
          if (v == d.default_value) c.fail("default value of " + key + " emitted");
          w.properties.emplace(key, std::move(v));
          break;
        }
        default: c.fail("option " + key + " cannot appear in a constructor");
      }
    }
    c.expect(")");
    c.expect_end();
    widgets_.push_back({std::move(w), line_no(), false});
  }

  void read_place(LineCursor& c, const std::string& name) {
    enter(Section::Widgets);
    if (widgets_.empty() || widgets_.back().placed || widgets_.back().widget.name != name) {
      c.fail("place line does not follow the constructor of " + name);
    }
    Widget& w = widgets_.back().widget;
    c.expect("x=");
    w.rect.x0 = c.integer();
    c.expect(", y=");
    w.rect.y0 = c.integer();
    const auto& registry = PropertyRegistry::standard();
    const bool sized = registry.supports(w.kind, "width") &&
                       registry.supports(w.kind, "height");
    if (!sized) {
      c.expect(", width=");
      w.rect.width = c.integer();
      c.expect(", height=");
      w.rect.height = c.integer();
    }
    c.expect(")");
    c.expect_end();
    widgets_.back().placed = true;
  }

  void read_bind(LineCursor& c, std::string name) {
    enter(Section::Bindings);
    std::string seq = c.string_literal();
    c.expect(", ");
    std::string handler = c.identifier();
    c.expect(")");
    c.expect_end();
    binds_.push_back({std::move(name), {std::move(seq), std::move(handler)}, line_no()});
  }

  DesignDocument build() {
    if (!widgets_.empty() && !widgets_.back().placed) {
      fail_at(widgets_.back().line, widgets_.back().widget.name + " has no place line");
    }
    if (menu_started_ && !menu_attached_) fail_at(line_no(), "menu bar never attached");
    DesignDocument doc(window_);

    std::set<std::string> used;
    for (auto& p : widgets_) {
      try {
        for (const auto& e : p.widget.events) used.insert(e.handler);
        doc.add_widget(std::move(p.widget));
      } catch (const Error& e) {
        fail_at(p.line, e.what());
      }
    }
    for (auto& b : binds_) {
      try {
        used.insert(b.binding.handler);
        doc.bind(b.widget, std::move(b.binding));
      } catch (const Error& e) {
        fail_at(b.line, e.what());
      }
    }
    for (const auto& h : used) {
      if (!stubs_.contains(h)) fail_at(static_cast<int>(lines_.size()), "handler " + h + " has no stub");
    }
    for (const auto& h : stubs_) {
      if (!used.contains(h)) fail_at(stub_lines_.at(h), "stub " + h + " is never bound");
    }

    if (!cascades_.empty()) {
      MenuModel& menu = doc.ensure_menu();
      for (const auto& cas : cascades_) {
        try {
          const int serial = menu.add_submenu(cas.title, cas.width);
          for (const auto& item : submenus_.at(cas.var).items) menu.add_item(serial, item);
        } catch (const Error& e) {
          fail_at(cas.line, e.what());
        }
      }
    }
    for (const auto& [var, sub] : submenus_) {
      if (!sub.attached) fail_at(line_no(), var + " is never attached");
    }

    for (WidgetKind kind : kRectKinds) {
      const std::string prefix(kind_name(kind));
      int highest = 0;
      for (const auto& w : doc.widgets()) {
        if (w.kind != kind || !w.name.starts_with(prefix)) continue;
        const std::string digits = w.name.substr(prefix.size());
        if (digits.empty() || digits.size() > 9 || digits[0] == '0' ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char ch) { return ch >= '0' && ch <= '9'; })) {
          continue;
        }
        highest = std::max(highest, std::stoi(digits));
      }
      if (highest > 0) doc.set_name_counter(kind, highest);
    }
    return doc;
  }

  struct Cascade {
    std::string title;
    int width = 0;
    std::string var;
    int line = 0;
  };

  std::vector<std::string> lines_;
  std::size_t index_ = 0;
  Section section_ = Section::Prologue;
  WindowSettings window_;
  std::set<std::string> stubs_;
  std::map<std::string, int> stub_lines_;
  bool menu_started_ = false;
  bool menu_attached_ = false;
  bool saw_mainloop_ = false;
  std::map<std::string, PendingSubmenu> submenus_;
  std::vector<Cascade> cascades_;
  std::vector<PendingWidget> widgets_;
  std::vector<PendingBind> binds_;
};

struct MenuShape {
  std::string title;
  int width;
  std::vector<MenuItem> items;
  friend bool operator==(const MenuShape&, const MenuShape&) = default;
};

std::vector<MenuShape> menu_shape(const DesignDocument& doc) {
  std::vector<MenuShape> out;
  if (!doc.menu()) return out;
  for (const auto& sub : doc.menu()->visible_submenus()) {
    out.push_back({sub.title, sub.width, doc.menu()->items(sub.serial)});
  }
  return out;
}

}  // namespace

DesignDocument parse_generated(std::string_view source) {
  return GeneratedParser(source).run();
}

bool round_trip_equal(const DesignDocument& a, const DesignDocument& b) {
  if (a.window() != b.window()) return false;
  if (!std::equal(a.widgets().begin(), a.widgets().end(), b.widgets().begin(),
                  b.widgets().end())) {
    return false;
  }
  return menu_shape(a) == menu_shape(b);
}

}  // namespace tkdesign
