#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tkdesign {

struct SubmenuButton {
  int serial = 0;  // 1-based, assigned in creation order, never reused
  std::string title;
  int width = 0;   // rendered button width in pixels, measured by the caller

  friend bool operator==(const SubmenuButton&, const SubmenuButton&) = default;
};

// A command entry or a separator line. Separators carry no label.
class MenuItem {
 public:
  MenuItem() = default;
  static MenuItem command(std::string label) { return MenuItem(std::move(label)); }
  static MenuItem separator() { return MenuItem(); }

  bool is_separator() const noexcept { return !label_; }
  const std::string& label() const { return *label_; }

  friend bool operator==(const MenuItem&, const MenuItem&) = default;

 private:
  explicit MenuItem(std::string label) : label_(std::move(label)) {}
  std::optional<std::string> label_;
};

struct SubmenuOrigin {
  int x = 0;
  int y = 0;

  friend bool operator==(const SubmenuOrigin&, const SubmenuOrigin&) = default;
};

struct VisibleSubmenu {
  int serial = 0;
  std::string title;
  int width = 0;
  SubmenuOrigin origin;
};

// The menu bar of the designed window: a row of submenu buttons, each owning
// a drop-down item list.
//
// Submenus are added strictly in sequence (+X) and deleted by serial (-X).
// Deleted serials go into a retirement log and are never reassigned, so the
// offset of submenu i is the summed width of every live submenu with a
// smaller serial:
//
//   X_i = sum of W_j for j in 1..i-1, j not retired;   Y_i = Y0
//
// Item edits (+Y/-Y) address positions 0-based within one submenu's list.
class MenuModel {
 public:
  explicit MenuModel(int y0 = 0) : y0_(y0) {}

  // +X. Throws InvalidWidth when width < 1.
  int add_submenu(std::string title, int width);

  // -X. Throws UnknownSerial or AlreadyDeleted.
  void delete_submenu(int serial);

  // +Y. position == nullopt appends. Throws UnknownSerial, DeletedSubmenu,
  // IndexOutOfRange (position > size).
  void add_item(int serial, MenuItem item, std::optional<std::size_t> position = std::nullopt);

  // -Y. Throws UnknownSerial, DeletedSubmenu, IndexOutOfRange.
  void delete_item(int serial, std::size_t index);

  // Throws UnknownSerial or DeletedSubmenu.
  SubmenuOrigin submenu_origin(int serial) const;

  std::vector<VisibleSubmenu> visible_submenus() const;

  // Throws UnknownSerial or DeletedSubmenu.
  const std::vector<MenuItem>& items(int serial) const;
  const SubmenuButton& button(int serial) const;

  bool is_live(int serial) const noexcept { return buttons_.contains(serial); }
  bool is_deleted(int serial) const noexcept;

  const std::map<int, SubmenuButton>& buttons() const noexcept { return buttons_; }
  const std::vector<int>& deleted() const noexcept { return deleted_; }
  const std::map<int, int>& offsets() const noexcept { return offsets_; }
  int last_serial() const noexcept { return last_serial_; }
  int y0() const noexcept { return y0_; }

  // Rebuilds a model from persisted state. Throws Validation when the parts
  // are inconsistent (retired serial still live, serial above last_serial...).
  static MenuModel restore(int y0, int last_serial, std::vector<SubmenuButton> buttons,
                           std::map<int, std::vector<MenuItem>> items,
                           std::vector<int> deleted);

  friend bool operator==(const MenuModel&, const MenuModel&) = default;

 private:
  void require_live(int serial) const;
  void recompute_offsets();

  std::map<int, SubmenuButton> buttons_;         // live submenu buttons
  std::map<int, std::vector<MenuItem>> items_;   // live submenu item lists
  std::vector<int> deleted_;                     // retired serials, in deletion order
  std::map<int, int> offsets_;                   // serial -> X_i, derived
  int last_serial_ = 0;
  int y0_ = 0;
};

}  // namespace tkdesign
