#pragma once

#include <compare>

namespace tkdesign {

// Canvas coordinates: origin at the top-left corner, x grows right, y grows
// down.
struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Rect {
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;

  int right() const noexcept { return x0 + width; }
  int bottom() const noexcept { return y0 + height; }

  // Full containment; shared edges count as inside.
  bool contains(const Rect& other) const noexcept {
    return other.x0 >= x0 && other.y0 >= y0 && other.right() <= right() &&
           other.bottom() <= bottom();
  }

  Rect translated(int dx, int dy) const noexcept {
    return {x0 + dx, y0 + dy, width, height};
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// True iff the interiors intersect with positive area. Edge and corner
// contact is not an overlap.
bool rects_overlap(const Rect& a, const Rect& b) noexcept;

// (min x, min y, |dx|, |dy|); may have zero extents.
Rect normalized_rect(Point a, Point b) noexcept;

}  // namespace tkdesign
