#pragma once

// Brute-force reference implementations the engine is checked against. They
// are written independently of the engine code and favour obviousness over
// speed.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tkdesign/design_model.hpp"

namespace oracle {

using tkdesign::Point;
using tkdesign::Rect;

// Rect spanned by two corners: sort the x and y coordinates.
Rect draw_rect(Point a, Point b);

// Positive-area intersection, by intersection extents.
bool areas_overlap(const Rect& a, const Rect& b);

// Positive-area intersection by enumerating the unit pixels of a; only for
// small rects.
bool pixel_overlap(const Rect& a, const Rect& b);

// O(n^2) scan of every widget pair.
bool all_disjoint(const tkdesign::DesignDocument& doc);

// Names of widgets all four of whose corners lie in the box spanned by a, b.
std::set<std::string> contained(const tkdesign::DesignDocument& doc, Point a, Point b);

// Menu bar kept as a flat list of (serial, title, width, alive) and plain
// vector item lists edited with insert/erase.
class NaiveMenu {
 public:
  struct Button {
    int serial;
    std::string title;
    int width;
    bool alive;
  };

  int add_submenu(const std::string& title, int width);
  bool delete_submenu(int serial);  // false if not live
  bool add_item(int serial, const std::string& label, int position);  // -1 appends
  bool delete_item(int serial, int index);

  // Sum of widths of alive buttons with a smaller serial.
  int origin_x(int serial) const;
  std::vector<int> live_serials() const;
  const std::vector<std::string>& items(int serial) const { return items_.at(serial); }
  const std::vector<Button>& buttons() const { return buttons_; }

 private:
  const Button* find(int serial) const;
  std::vector<Button> buttons_;
  std::map<int, std::vector<std::string>> items_;
};

}  // namespace oracle
