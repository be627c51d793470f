#include "tkdesign/engine_service.hpp"

#include <json.hpp>

#include "tkdesign/errors.hpp"
#include "tkdesign/persistence.hpp"

namespace tkdesign {

using Json = nlohmann::ordered_json;

namespace {

Json rect_json(const Rect& r) {
  return {{"x0", r.x0}, {"y0", r.y0}, {"width", r.width}, {"height", r.height}};
}

Json error_json(const Error& e) {
  Json j = {{"code", std::string(to_string(e.code()))},
            {"message", e.what()},
            {"subjects", e.subjects()}};
  if (e.line()) j["line"] = *e.line();
  return j;
}

// Keeps a recorded comment on one line.
std::string one_line(std::string_view text) {
  std::string out;
  for (char c : text) out += (c == '\n' || c == '\r') ? ' ' : c;
  return out;
}

}  // namespace

EngineService::EngineService(DesignDocument doc) : initial_(doc), session_(std::move(doc)) {}

std::string EngineService::handle_line(std::string_view line) {
  Json response = {{"ok", true}, {"notice", nullptr}, {"error", nullptr}};
  std::optional<Command> command;
  try {
    if (line.find_first_of("\r\n") != std::string_view::npos) {
      throw Error(ErrorCode::TraceParse, "a request carries exactly one trace line");
    }
    command = parse_command(line);
  } catch (const Error& e) {
    response["ok"] = false;
    response["error"] = error_json(e);
    trace_ += "# rejected: " + one_line(line) + "\n";
  }
  if (command) {
    const SessionMode before = session_.mode();
    const std::string canonical = format_command(*command);
    try {
      if (auto notice = session_.apply(*command)) response["notice"] = *notice;
      trace_ += canonical + "\n";
    } catch (const Error& e) {
      response["ok"] = false;
      response["error"] = error_json(e);
      trace_ += "# rejected: " + canonical + "\n";
      // A failed release still ends its gesture; replay must end it too.
      if (session_.mode() != before) trace_ += "ABORT\n";
    }
  }
  response["state"] = Json::parse(state_json());
  return response.dump();
}

std::string EngineService::state_json() const {
  Json j = Json::object();
  j["mode"] = std::string(to_string(session_.mode()));
  j["tool"] = session_.tool() ? Json(std::string(kind_name(*session_.tool()))) : Json("select");
  j["grid"] = session_.grid_visible();
  j["grid_size"] = session_.grid_size();
  j["snap"] = session_.snap();
  j["lock"] = session_.locked();
  const auto preview = session_.preview();
  j["preview"] = preview ? rect_json(*preview) : Json(nullptr);
  j["selection"] = session_.selection() ? Json(session_.selection()->names) : Json(nullptr);
  Json path = Json::array();
  for (const auto& p : session_.trajectory()) path.push_back({p.x, p.y});
  j["trajectory"] = std::move(path);
  Json menu = Json::array();
  if (const auto& m = session_.document().menu()) {
    for (const auto& sub : m->visible_submenus()) {
      menu.push_back({{"serial", sub.serial},
                      {"title", sub.title},
                      {"x", sub.origin.x},
                      {"y", sub.origin.y},
                      {"width", sub.width}});
    }
  }
  j["menu_layout"] = std::move(menu);
  j["document"] = Json::parse(serialize(session_.document()));
  return j.dump();
}

std::string EngineService::document_text() const { return serialize(session_.document()); }

std::string EngineService::source_text() const { return generate(session_.document()).str(); }

}  // namespace tkdesign
