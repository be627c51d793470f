#pragma once

#include <string>
#include <vector>

#include "tkdesign/design_model.hpp"
#include "tkdesign/geometry.hpp"
#include "tkdesign/widget_kind.hpp"

namespace tkdesign {

// Live state of a click-drag draw: the press point and the latest pointer
// position.
struct GestureState {
  WidgetKind kind = WidgetKind::Button;
  Point anchor;
  Point current;
};

// Live rubber band of a box selection.
struct SelectionRect {
  Point anchor;
  Point current;

  Rect normalized() const noexcept { return normalized_rect(anchor, current); }
};

struct Selection {
  std::vector<std::string> names;  // document order
  bool marked = true;              // drawn in the selection color

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct DrawOptions {
  bool snap = false;
  int grid_size = 10;
};

// Throws MenuNotDrawable for Menu, PointOutsideCanvas unless
// 0 <= x < width and 0 <= y < height.
GestureState begin_draw(const DesignDocument& doc, WidgetKind kind, Point p0);

// Moves the live corner and returns the preview rect. Zero extents preview as
// 1 px. The document is never touched mid-gesture.
Rect update_draw(GestureState& state, Point p);
Rect preview_rect(const GestureState& state) noexcept;

// Rect a release would commit: the far corner clamped to the canvas, snapped
// to the grid when enabled, and a zero extent replaced by the kind's
// prototype size.
Rect commit_rect(const DesignDocument& doc, const GestureState& state,
                 const DrawOptions& options = {});

// Adds an auto-named widget with default properties in container "self".
// Propagates add_widget errors with the document unchanged.
Widget commit_draw(DesignDocument& doc, const GestureState& state,
                   const DrawOptions& options = {});

// Widgets whose rects lie entirely inside the normalized selection rect,
// edges inclusive. Throws EmptySelection when nothing matches.
Selection commit_select(const DesignDocument& doc, const SelectionRect& sel);

// Translates the selection as a unit. Throws UnknownName, MoveOutOfBounds or
// MoveCollision with the document unchanged.
void apply_move(DesignDocument& doc, const Selection& selection, int dx, int dy);

}  // namespace tkdesign
