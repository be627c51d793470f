#include "tkdesign/session.hpp"

#include <charconv>

#include "tkdesign/errors.hpp"

namespace tkdesign {

std::string_view to_string(SessionMode mode) noexcept {
  switch (mode) {
    case SessionMode::Idle: return "idle";
    case SessionMode::Drawing: return "drawing";
    case SessionMode::Selecting: return "selecting";
    case SessionMode::FunctionMenu: return "function_menu";
    case SessionMode::MoveDrag: return "move_drag";
  }
  return "?";
}

namespace {

int parse_int_token(const Token& t, std::string_view what) {
  int v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [end, ec] = std::from_chars(first, last, v);
  if (t.quoted || t.text.empty() || ec != std::errc{} || end != last) {
    throw Error(ErrorCode::TypeMismatch,
                std::string(what) + " expects an integer, got '" + t.text + "'");
  }
  return v;
}

bool parse_bool_token(const Token& t, std::string_view what) {
  if (!t.quoted && t.text == "true") return true;
  if (!t.quoted && t.text == "false") return false;
  throw Error(ErrorCode::TypeMismatch,
              std::string(what) + " expects true or false, got '" + t.text + "'");
}

}  // namespace

Session::Session(DesignDocument doc) : doc_(std::move(doc)) {}

std::optional<std::string> Session::apply(const Command& command) {
  return std::visit([this](const auto& c) { return on(c); }, command);
}

std::optional<Rect> Session::preview() const {
  if (mode_ == SessionMode::Drawing && draw_) return preview_rect(*draw_);
  if (mode_ == SessionMode::Selecting && select_) return select_->normalized();
  return std::nullopt;
}

void Session::require_mode(std::initializer_list<SessionMode> allowed,
                           std::string_view what) const {
  for (SessionMode m : allowed) {
    if (m == mode_) return;
  }
  throw Error(ErrorCode::InvalidState,
              std::string(what) + " is not allowed while " + std::string(to_string(mode_)));
}

void Session::require_inside(Point p) const {
  const auto& win = doc_.window();
  if (p.x < 0 || p.y < 0 || p.x >= win.width || p.y >= win.height) {
    throw Error(ErrorCode::PointOutsideCanvas,
                "point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                    ") is outside the " + std::to_string(win.width) + "x" +
                    std::to_string(win.height) + " canvas");
  }
}

void Session::close_function_menu() {
  selection_.reset();
  before_selection_.reset();
  trajectory_.clear();
  move_delta_ = {};
  mode_ = SessionMode::Idle;
}

std::optional<std::string> Session::on(const cmd::SetWindow& c) {
  require_mode({SessionMode::Idle}, "WINDOW");
  WindowSettings w = doc_.window();
  w.width = c.width;
  w.height = c.height;
  if (c.title) w.title = *c.title;
  doc_.set_window(std::move(w));
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::SetWindowField& c) {
  require_mode({SessionMode::Idle}, "SETWIN");
  WindowSettings w = doc_.window();
  const std::string& f = c.field;
  if (f == "title") {
    w.title = c.value.text;
  } else if (f == "width") {
    w.width = parse_int_token(c.value, "window width");
  } else if (f == "height") {
    w.height = parse_int_token(c.value, "window height");
  } else if (f == "background") {
    w.background = c.value.text;
  } else if (f == "resizable_x") {
    w.resizable_x = parse_bool_token(c.value, "resizable_x");
  } else if (f == "resizable_y") {
    w.resizable_y = parse_bool_token(c.value, "resizable_y");
  } else {
    throw Error(ErrorCode::UnknownProperty, "unknown window field '" + f + "'");
  }
  doc_.set_window(std::move(w));
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::ChooseKind& c) {
  require_mode({SessionMode::Idle}, "KIND");
  if (c.kind == WidgetKind::Menu) {
    // The menu bar is edited through its own panel, never drawn.
    doc_.ensure_menu();
    return std::nullopt;
  }
  tool_ = c.kind;
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::SelectTool&) {
  require_mode({SessionMode::Idle}, "SELECT");
  tool_.reset();
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Press& c) {
  require_mode({SessionMode::Idle, SessionMode::MoveDrag}, "PRESS");
  if (mode_ == SessionMode::MoveDrag) {
    if (!trajectory_.empty()) {
      throw Error(ErrorCode::InvalidState, "PRESS while a move drag is in progress");
    }
    require_inside(c.at);
    trajectory_.push_back(c.at);
    return std::nullopt;
  }
  if (tool_) {
    draw_ = begin_draw(doc_, *tool_, c.at);
    mode_ = SessionMode::Drawing;
  } else {
    require_inside(c.at);
    select_ = SelectionRect{c.at, c.at};
    mode_ = SessionMode::Selecting;
  }
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Drag& c) {
  require_mode({SessionMode::Drawing, SessionMode::Selecting, SessionMode::MoveDrag},
               "DRAG");
  switch (mode_) {
    case SessionMode::Drawing: update_draw(*draw_, c.at); break;
    case SessionMode::Selecting: select_->current = c.at; break;
    default:
      if (trajectory_.empty()) throw Error(ErrorCode::InvalidState, "DRAG before PRESS");
      trajectory_.push_back(c.at);
  }
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Release& c) {
  require_mode({SessionMode::Drawing, SessionMode::Selecting, SessionMode::MoveDrag},
               "RELEASE");
  if (mode_ == SessionMode::Drawing) {
    GestureState g = *draw_;
    update_draw(g, c.at);
    draw_.reset();
    mode_ = SessionMode::Idle;  // the gesture ends whether or not it commits
    commit_draw(doc_, g, DrawOptions{snap_, grid_size_});
    return std::nullopt;
  }
  if (mode_ == SessionMode::Selecting) {
    SelectionRect r = *select_;
    r.current = c.at;
    select_.reset();
    mode_ = SessionMode::Idle;
    try {
      selection_ = commit_select(doc_, r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptySelection) throw;
      return std::string(e.what());
    }
    before_selection_ = doc_;
    move_delta_ = {};
    mode_ = SessionMode::FunctionMenu;
    return std::nullopt;
  }
  // Move drag: the net pointer displacement is the move.
  if (trajectory_.empty()) throw Error(ErrorCode::InvalidState, "RELEASE before PRESS");
  const Point start = trajectory_.front();
  trajectory_.clear();
  mode_ = SessionMode::FunctionMenu;
  const int dx = c.at.x - start.x;
  const int dy = c.at.y - start.y;
  apply_move(doc_, *selection_, dx, dy);
  move_delta_.x += dx;
  move_delta_.y += dy;
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Abort&) {
  switch (mode_) {
    case SessionMode::Drawing:
    case SessionMode::Selecting:
      draw_.reset();
      select_.reset();
      mode_ = SessionMode::Idle;
      break;
    case SessionMode::MoveDrag:
      trajectory_.clear();
      mode_ = SessionMode::FunctionMenu;
      break;
    case SessionMode::Idle: break;
    case SessionMode::FunctionMenu:
      throw Error(ErrorCode::InvalidState, "ABORT with the function menu open; use FUNC CANCEL");
  }
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Function& c) {
  require_mode({SessionMode::FunctionMenu}, "FUNC");
  using cmd::FunctionChoice;
  switch (c.choice) {
    case FunctionChoice::Move:
      if (!c.delta) {
        trajectory_.clear();
        mode_ = SessionMode::MoveDrag;
        return std::nullopt;
      }
      apply_move(doc_, *selection_, c.delta->x, c.delta->y);
      move_delta_.x += c.delta->x;
      move_delta_.y += c.delta->y;
      return std::nullopt;
    case FunctionChoice::Design:
      // Opens the property panel; edits arrive as SETPROP/BIND.
      return std::nullopt;
    case FunctionChoice::Delete: {
      DesignDocument next = doc_;
      for (const auto& name : selection_->names) next.remove_widget(name);
      doc_ = std::move(next);
      selection_->names.clear();
      return std::nullopt;
    }
    case FunctionChoice::Ok:
      close_function_menu();
      return std::nullopt;
    case FunctionChoice::Cancel:
      doc_ = std::move(*before_selection_);
      close_function_menu();
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::SetProperty& c) {
  require_mode({SessionMode::Idle, SessionMode::FunctionMenu}, "SETPROP");
  const PropertyValue value =
      PropertyRegistry::standard().parse_value(c.property, c.value.text, c.value.quoted);
  // Validate everything before notifying, so observers only see committed
  // changes.
  const ChangeEvent ev = set_property(doc_, c.widget, c.property, value, nullptr);
  if (selection_ && c.property == "name") {
    for (auto& n : selection_->names) {
      if (n == c.widget) n = std::get<std::string>(value);
    }
  }
  notifier_.notify(ev);
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::BindEvent& c) {
  require_mode({SessionMode::Idle, SessionMode::FunctionMenu}, "BIND");
  bind_event(doc_, c.widget, c.trigger, c.handler);
  return std::nullopt;
}

template <typename F>
void Session::edit_menu(F&& f) {
  require_mode({SessionMode::Idle, SessionMode::FunctionMenu}, "MENU");
  MenuModel menu = doc_.menu() ? *doc_.menu() : MenuModel{};
  f(menu);
  doc_.set_menu(std::move(menu));
}

std::optional<std::string> Session::on(const cmd::MenuAddSubmenu& c) {
  edit_menu([&](MenuModel& m) { m.add_submenu(c.title, c.width); });
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::MenuDeleteSubmenu& c) {
  edit_menu([&](MenuModel& m) { m.delete_submenu(c.serial); });
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::MenuAddItem& c) {
  edit_menu([&](MenuModel& m) { m.add_item(c.serial, c.item, c.position); });
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::MenuDeleteItem& c) {
  edit_menu([&](MenuModel& m) { m.delete_item(c.serial, c.index); });
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Grid& c) {
  if (c.size) {
    if (*c.size < 1) {
      throw Error(ErrorCode::Validation,
                  "grid size must be >= 1, got " + std::to_string(*c.size));
    }
    grid_size_ = *c.size;
  }
  grid_ = c.on;
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Snap& c) {
  snap_ = c.on;
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Lock& c) {
  // Panning lock is a view concern; headlessly it is only recorded.
  lock_ = c.on;
  return std::nullopt;
}

std::optional<std::string> Session::on(const cmd::Compile&) {
  source_ = generate(doc_);
  return std::nullopt;
}

DesignDocument replay_trace(DesignDocument doc, const InteractionTrace& trace) {
  Session session(std::move(doc));
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    try {
      session.apply(trace.entries[i].command);
    } catch (const Error& e) {
      throw ReplayError(e, i, trace.entries[i].line);
    }
  }
  return session.document();
}

}  // namespace tkdesign
