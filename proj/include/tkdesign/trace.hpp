#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tkdesign/geometry.hpp"
#include "tkdesign/menu_model.hpp"
#include "tkdesign/widget_kind.hpp"

namespace tkdesign {

// A word from a trace line; quoted tokens keep their unescaped content.
struct Token {
  std::string text;
  bool quoted = false;

  friend bool operator==(const Token&, const Token&) = default;
};

namespace cmd {

struct SetWindow {
  int width = 0;
  int height = 0;
  std::optional<std::string> title;
  friend bool operator==(const SetWindow&, const SetWindow&) = default;
};
struct SetWindowField {
  std::string field;  // title, width, height, background, resizable_x, resizable_y
  Token value;
  friend bool operator==(const SetWindowField&, const SetWindowField&) = default;
};
struct ChooseKind {
  WidgetKind kind = WidgetKind::Button;
  friend bool operator==(const ChooseKind&, const ChooseKind&) = default;
};
struct SelectTool {
  friend bool operator==(const SelectTool&, const SelectTool&) = default;
};
struct Press {
  Point at;
  friend bool operator==(const Press&, const Press&) = default;
};
struct Drag {
  Point at;
  friend bool operator==(const Drag&, const Drag&) = default;
};
struct Release {
  Point at;
  friend bool operator==(const Release&, const Release&) = default;
};
struct Abort {
  friend bool operator==(const Abort&, const Abort&) = default;
};

enum class FunctionChoice { Move, Design, Delete, Ok, Cancel };

struct Function {
  FunctionChoice choice = FunctionChoice::Ok;
  std::optional<Point> delta;  // Move only; absent means "drag to move"
  friend bool operator==(const Function&, const Function&) = default;
};
struct SetProperty {
  std::string widget;
  std::string property;
  Token value;
  friend bool operator==(const SetProperty&, const SetProperty&) = default;
};
struct BindEvent {
  std::string widget;
  std::string trigger;
  std::string handler;
  friend bool operator==(const BindEvent&, const BindEvent&) = default;
};
struct MenuAddSubmenu {
  std::string title;
  int width = 0;
  friend bool operator==(const MenuAddSubmenu&, const MenuAddSubmenu&) = default;
};
struct MenuDeleteSubmenu {
  int serial = 0;
  friend bool operator==(const MenuDeleteSubmenu&, const MenuDeleteSubmenu&) = default;
};
struct MenuAddItem {
  int serial = 0;
  MenuItem item;
  std::optional<std::size_t> position;
  friend bool operator==(const MenuAddItem&, const MenuAddItem&) = default;
};
struct MenuDeleteItem {
  int serial = 0;
  std::size_t index = 0;
  friend bool operator==(const MenuDeleteItem&, const MenuDeleteItem&) = default;
};
struct Grid {
  bool on = false;
  std::optional<int> size;
  friend bool operator==(const Grid&, const Grid&) = default;
};
struct Snap {
  bool on = false;
  friend bool operator==(const Snap&, const Snap&) = default;
};
struct Lock {
  bool on = false;
  friend bool operator==(const Lock&, const Lock&) = default;
};
struct Compile {
  friend bool operator==(const Compile&, const Compile&) = default;
};

}  // namespace cmd

using Command =
    std::variant<cmd::SetWindow, cmd::SetWindowField, cmd::ChooseKind, cmd::SelectTool,
                 cmd::Press, cmd::Drag, cmd::Release, cmd::Abort, cmd::Function,
                 cmd::SetProperty, cmd::BindEvent, cmd::MenuAddSubmenu,
                 cmd::MenuDeleteSubmenu, cmd::MenuAddItem, cmd::MenuDeleteItem,
                 cmd::Grid, cmd::Snap, cmd::Lock, cmd::Compile>;

struct TraceEntry {
  Command command;
  int line = 0;  // 1-based line in the source text
};

struct InteractionTrace {
  std::vector<TraceEntry> entries;
};

// Splits one line into tokens. A line whose first word starts with '#' is a
// comment.
// Throws TraceParse (line is used for the message only).
std::vector<Token> tokenize_trace_line(std::string_view line, int line_no = 1);

// Parses a single command line; nullopt for blank or comment-only lines.
// Throws TraceParse.
std::optional<Command> parse_command(std::string_view line, int line_no = 1);

// Throws TraceParse carrying the offending line number.
InteractionTrace parse_trace(std::string_view text);

// Canonical single-line form; parse_command(format_command(c)) == c.
std::string format_command(const Command& command);
std::string format_trace(const InteractionTrace& trace);

// Double-quoted form with \\, \", \n, \t and \r escaped.
std::string quote_trace_string(std::string_view text);

}  // namespace tkdesign
