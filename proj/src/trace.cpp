#include "tkdesign/trace.hpp"

#include <charconv>
#include <sstream>

#include "tkdesign/errors.hpp"

namespace tkdesign {

namespace {

[[noreturn]] void parse_error(int line_no, const std::string& message) {
  throw Error(ErrorCode::TraceParse,
              "trace line " + std::to_string(line_no) + ": " + message, {}, line_no);
}

template <typename Int>
Int parse_int(const Token& tok, int line_no, std::string_view what) {
  Int v{};
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [end, ec] = std::from_chars(first, last, v);
  if (tok.quoted || ec != std::errc{} || end != last) {
    parse_error(line_no, "expected " + std::string(what) + ", got '" + tok.text + "'");
  }
  return v;
}

bool parse_on_off(const Token& tok, int line_no) {
  if (!tok.quoted && tok.text == "ON") return true;
  if (!tok.quoted && tok.text == "OFF") return false;
  parse_error(line_no, "expected ON or OFF, got '" + tok.text + "'");
}

bool needs_quotes(std::string_view text) {
  if (text.empty()) return true;
  for (char c : text) {
    if (c == '"' || c == '\\' || static_cast<unsigned char>(c) <= ' ') {
      return true;
    }
  }
  return false;
}

std::string format_token(const Token& tok) {
  return tok.quoted || needs_quotes(tok.text) ? quote_trace_string(tok.text) : tok.text;
}

std::string point_text(Point p) {
  return std::to_string(p.x) + " " + std::to_string(p.y);
}

}  // namespace

std::string quote_trace_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::vector<Token> tokenize_trace_line(std::string_view line, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#' && tokens.empty()) break;  // full-line comment
    if (c == '"') {
      Token tok{{}, true};
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char ch = line[i++];
        if (ch == '"') {
          closed = true;
          break;
        }
        if (ch == '\\') {
          if (i >= line.size()) break;
          char esc = line[i++];
          switch (esc) {
            case 'n': tok.text += '\n'; break;
            case 't': tok.text += '\t'; break;
            case 'r': tok.text += '\r'; break;
            case '"': tok.text += '"'; break;
            case '\\': tok.text += '\\'; break;
            default: parse_error(line_no, std::string("unknown escape \\") + esc);
          }
          continue;
        }
        tok.text += ch;
      }
      if (!closed) parse_error(line_no, "unterminated string");
      if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
        parse_error(line_no, "text directly after a closing quote");
      }
      tokens.push_back(std::move(tok));
      continue;
    }
    Token tok;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      if (line[i] == '"') parse_error(line_no, "quote inside a bare word");
      tok.text += line[i++];
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::optional<Command> parse_command(std::string_view line, int line_no) {
  const auto t = tokenize_trace_line(line, line_no);
  if (t.empty()) return std::nullopt;
  const Token& verb = t.front();
  if (verb.quoted) parse_error(line_no, "a command must start with a verb");
  const std::size_t argc = t.size() - 1;
  auto expect_args = [&](std::size_t lo, std::size_t hi) {
    if (argc < lo || argc > hi) {
      parse_error(line_no, verb.text + " takes " +
                               (lo == hi ? std::to_string(lo)
                                         : std::to_string(lo) + ".." + std::to_string(hi)) +
                               " arguments, got " + std::to_string(argc));
    }
  };
  auto point_at = [&](std::size_t i) {
    return Point{parse_int<int>(t[i], line_no, "an integer coordinate"),
                 parse_int<int>(t[i + 1], line_no, "an integer coordinate")};
  };
  auto word = [&](std::size_t i) -> const std::string& {
    if (t[i].quoted) parse_error(line_no, "expected a bare word, got a string");
    return t[i].text;
  };

  const std::string& v = verb.text;
  if (v == "WINDOW") {
    expect_args(2, 3);
    cmd::SetWindow c{parse_int<int>(t[1], line_no, "a width"),
                     parse_int<int>(t[2], line_no, "a height"), std::nullopt};
    if (argc == 3) c.title = t[3].text;
    return c;
  }
  if (v == "SETWIN") {
    expect_args(2, 2);
    return cmd::SetWindowField{word(1), t[2]};
  }
  if (v == "KIND") {
    expect_args(1, 1);
    auto kind = parse_kind(t[1].text);
    if (!kind) parse_error(line_no, "unknown widget kind '" + t[1].text + "'");
    return cmd::ChooseKind{*kind};
  }
  if (v == "SELECT") {
    expect_args(0, 0);
    return cmd::SelectTool{};
  }
  if (v == "PRESS" || v == "DRAG" || v == "RELEASE") {
    expect_args(2, 2);
    const Point p = point_at(1);
    if (v == "PRESS") return cmd::Press{p};
    if (v == "DRAG") return cmd::Drag{p};
    return cmd::Release{p};
  }
  if (v == "ABORT") {
    expect_args(0, 0);
    return cmd::Abort{};
  }
  if (v == "FUNC") {
    expect_args(1, 3);
    const std::string& f = word(1);
    if (f == "MOVE") {
      if (argc == 2) parse_error(line_no, "FUNC MOVE takes both dx and dy or neither");
      cmd::Function c{cmd::FunctionChoice::Move, std::nullopt};
      if (argc == 3) c.delta = point_at(2);
      return c;
    }
    if (argc != 1) parse_error(line_no, "FUNC " + f + " takes no arguments");
    if (f == "DESIGN") return cmd::Function{cmd::FunctionChoice::Design, std::nullopt};
    if (f == "DELETE") return cmd::Function{cmd::FunctionChoice::Delete, std::nullopt};
    if (f == "OK") return cmd::Function{cmd::FunctionChoice::Ok, std::nullopt};
    if (f == "CANCEL") return cmd::Function{cmd::FunctionChoice::Cancel, std::nullopt};
    parse_error(line_no, "unknown function '" + f + "'");
  }
  if (v == "SETPROP") {
    expect_args(3, 3);
    return cmd::SetProperty{word(1), word(2), t[3]};
  }
  if (v == "BIND") {
    expect_args(3, 3);
    return cmd::BindEvent{word(1), t[2].text, word(3)};
  }
  if (v == "MENU") {
    if (argc < 1) parse_error(line_no, "MENU needs an operation");
    const std::string& op = word(1);
    if (op == "+X") {
      expect_args(3, 3);
      return cmd::MenuAddSubmenu{t[2].text, parse_int<int>(t[3], line_no, "a width")};
    }
    if (op == "-X") {
      expect_args(2, 2);
      return cmd::MenuDeleteSubmenu{parse_int<int>(t[2], line_no, "a serial")};
    }
    if (op == "+Y") {
      expect_args(3, 4);
      cmd::MenuAddItem c;
      c.serial = parse_int<int>(t[2], line_no, "a serial");
      c.item = (!t[3].quoted && t[3].text == "-") ? MenuItem::separator()
                                                  : MenuItem::command(t[3].text);
      if (argc == 4) c.position = parse_int<std::size_t>(t[4], line_no, "an index");
      return c;
    }
    if (op == "-Y") {
      expect_args(3, 3);
      return cmd::MenuDeleteItem{parse_int<int>(t[2], line_no, "a serial"),
                                 parse_int<std::size_t>(t[3], line_no, "an index")};
    }
    parse_error(line_no, "unknown menu operation '" + op + "'");
  }
  if (v == "GRID") {
    expect_args(1, 2);
    cmd::Grid c{parse_on_off(t[1], line_no), std::nullopt};
    if (argc == 2) {
      if (!c.on) parse_error(line_no, "GRID OFF takes no size");
      c.size = parse_int<int>(t[2], line_no, "a grid size");
    }
    return c;
  }
  if (v == "SNAP") {
    expect_args(1, 1);
    return cmd::Snap{parse_on_off(t[1], line_no)};
  }
  if (v == "LOCK") {
    expect_args(1, 1);
    return cmd::Lock{parse_on_off(t[1], line_no)};
  }
  if (v == "COMPILE") {
    expect_args(0, 0);
    return cmd::Compile{};
  }
  parse_error(line_no, "unknown verb '" + v + "'");
}

InteractionTrace parse_trace(std::string_view text) {
  InteractionTrace trace;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (auto c = parse_command(line, line_no)) {
      trace.entries.push_back({std::move(*c), line_no});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return trace;
}

std::string format_command(const Command& command) {
  struct Formatter {
    std::string operator()(const cmd::SetWindow& c) const {
      std::string s = "WINDOW " + std::to_string(c.width) + " " + std::to_string(c.height);
      if (c.title) s += " " + quote_trace_string(*c.title);
      return s;
    }
    std::string operator()(const cmd::SetWindowField& c) const {
      return "SETWIN " + c.field + " " + format_token(c.value);
    }
    std::string operator()(const cmd::ChooseKind& c) const {
      return "KIND " + std::string(kind_name(c.kind));
    }
    std::string operator()(const cmd::SelectTool&) const { return "SELECT"; }
    std::string operator()(const cmd::Press& c) const { return "PRESS " + point_text(c.at); }
    std::string operator()(const cmd::Drag& c) const { return "DRAG " + point_text(c.at); }
    std::string operator()(const cmd::Release& c) const {
      return "RELEASE " + point_text(c.at);
    }
    std::string operator()(const cmd::Abort&) const { return "ABORT"; }
    std::string operator()(const cmd::Function& c) const {
      switch (c.choice) {
        case cmd::FunctionChoice::Move:
          return c.delta ? "FUNC MOVE " + point_text(*c.delta) : "FUNC MOVE";
        case cmd::FunctionChoice::Design: return "FUNC DESIGN";
        case cmd::FunctionChoice::Delete: return "FUNC DELETE";
        case cmd::FunctionChoice::Ok: return "FUNC OK";
        case cmd::FunctionChoice::Cancel: return "FUNC CANCEL";
      }
      return "FUNC OK";
    }
    std::string operator()(const cmd::SetProperty& c) const {
      return "SETPROP " + c.widget + " " + c.property + " " + format_token(c.value);
    }
    std::string operator()(const cmd::BindEvent& c) const {
      return "BIND " + c.widget + " " + format_token({c.trigger, false}) + " " + c.handler;
    }
    std::string operator()(const cmd::MenuAddSubmenu& c) const {
      return "MENU +X " + quote_trace_string(c.title) + " " + std::to_string(c.width);
    }
    std::string operator()(const cmd::MenuDeleteSubmenu& c) const {
      return "MENU -X " + std::to_string(c.serial);
    }
    std::string operator()(const cmd::MenuAddItem& c) const {
      std::string s = "MENU +Y " + std::to_string(c.serial) + " " +
                      (c.item.is_separator() ? std::string("-")
                                             : quote_trace_string(c.item.label()));
      if (c.position) s += " " + std::to_string(*c.position);
      return s;
    }
    std::string operator()(const cmd::MenuDeleteItem& c) const {
      return "MENU -Y " + std::to_string(c.serial) + " " + std::to_string(c.index);
    }
    std::string operator()(const cmd::Grid& c) const {
      if (!c.on) return "GRID OFF";
      return c.size ? "GRID ON " + std::to_string(*c.size) : "GRID ON";
    }
    std::string operator()(const cmd::Snap& c) const {
      return c.on ? "SNAP ON" : "SNAP OFF";
    }
    std::string operator()(const cmd::Lock& c) const {
      return c.on ? "LOCK ON" : "LOCK OFF";
    }
    std::string operator()(const cmd::Compile&) const { return "COMPILE"; }
  };
  return std::visit(Formatter{}, command);
}

std::string format_trace(const InteractionTrace& trace) {
  std::string out;
  for (const auto& e : trace.entries) {
    out += format_command(e.command);
    out += '\n';
  }
  return out;
}

}  // namespace tkdesign
