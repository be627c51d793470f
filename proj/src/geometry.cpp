#include "tkdesign/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace tkdesign {

bool rects_overlap(const Rect& a, const Rect& b) noexcept {
  return a.x0 < b.right() && b.x0 < a.right() && a.y0 < b.bottom() &&
         b.y0 < a.bottom();
}

Rect normalized_rect(Point a, Point b) noexcept {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::abs(b.x - a.x),
          std::abs(b.y - a.y)};
}

}  // namespace tkdesign
