#include "tkdesign/interaction.hpp"

#include <algorithm>
#include <cmath>

#include "tkdesign/errors.hpp"

namespace tkdesign {

namespace {

int snap_to(int v, int grid) {
  const double q = std::round(static_cast<double>(v) / grid);
  return static_cast<int>(q) * grid;
}

}  // namespace

GestureState begin_draw(const DesignDocument& doc, WidgetKind kind, Point p0) {
  if (kind == WidgetKind::Menu) {
    throw Error(ErrorCode::MenuNotDrawable,
                "Menu cannot be drawn on the canvas; use the menu editor");
  }
  const auto& win = doc.window();
  if (p0.x < 0 || p0.y < 0 || p0.x >= win.width || p0.y >= win.height) {
    throw Error(ErrorCode::PointOutsideCanvas,
                "point (" + std::to_string(p0.x) + "," + std::to_string(p0.y) +
                    ") is outside the " + std::to_string(win.width) + "x" +
                    std::to_string(win.height) + " canvas");
  }
  return {kind, p0, p0};
}

Rect preview_rect(const GestureState& state) noexcept {
  Rect r = normalized_rect(state.anchor, state.current);
  r.width = std::max(r.width, 1);
  r.height = std::max(r.height, 1);
  return r;
}

Rect update_draw(GestureState& state, Point p) {
  state.current = p;
  return preview_rect(state);
}

Rect commit_rect(const DesignDocument& doc, const GestureState& state,
                 const DrawOptions& options) {
  const auto& win = doc.window();
  Point a = state.anchor;
  Point b{std::clamp(state.current.x, 0, win.width),
          std::clamp(state.current.y, 0, win.height)};
  if (options.snap && options.grid_size > 0) {
    a = {snap_to(a.x, options.grid_size), snap_to(a.y, options.grid_size)};
    b = {snap_to(b.x, options.grid_size), snap_to(b.y, options.grid_size)};
  }
  Rect r = normalized_rect(a, b);
  const Size proto = prototype_size(state.kind);
  if (r.width == 0) r.width = proto.width;
  if (r.height == 0) r.height = proto.height;
  return r;
}

Widget commit_draw(DesignDocument& doc, const GestureState& state,
                   const DrawOptions& options) {
  Widget w;
  w.kind = state.kind;
  w.rect = commit_rect(doc, state, options);
  const std::string name = doc.add_auto_named(std::move(w));
  return doc.widget(name);
}

Selection commit_select(const DesignDocument& doc, const SelectionRect& sel) {
  const Rect box = sel.normalized();
  Selection out;
  for (const auto& w : doc.widgets()) {
    if (box.contains(w.rect)) out.names.push_back(w.name);
  }
  if (out.names.empty()) {
    throw Error(ErrorCode::EmptySelection, "the selection box contains no widget");
  }
  return out;
}

void apply_move(DesignDocument& doc, const Selection& selection, int dx, int dy) {
  doc.translate(selection.names, dx, dy);
}

}  // namespace tkdesign
