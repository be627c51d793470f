#include "tkdesign/menu_model.hpp"

#include <algorithm>

#include "tkdesign/errors.hpp"
#include "tkdesign/identifiers.hpp"

namespace tkdesign {

namespace {

std::string serial_text(int serial) { return "submenu " + std::to_string(serial); }

void check_text(const std::string& text, std::string_view what) {
  if (!is_valid_utf8(text)) {
    throw Error(ErrorCode::Validation, std::string(what) + " is not valid UTF-8");
  }
}

}  // namespace

bool MenuModel::is_deleted(int serial) const noexcept {
  return std::find(deleted_.begin(), deleted_.end(), serial) != deleted_.end();
}

void MenuModel::require_live(int serial) const {
  if (is_live(serial)) return;
  if (is_deleted(serial)) {
    throw Error(ErrorCode::DeletedSubmenu, serial_text(serial) + " has been deleted");
  }
  throw Error(ErrorCode::UnknownSerial, "no " + serial_text(serial));
}

int MenuModel::add_submenu(std::string title, int width) {
  if (width < 1) {
    throw Error(ErrorCode::InvalidWidth,
                "submenu width must be >= 1, got " + std::to_string(width));
  }
  check_text(title, "submenu title");
  const int serial = last_serial_ + 1;
  buttons_.emplace(serial, SubmenuButton{serial, std::move(title), width});
  items_.emplace(serial, std::vector<MenuItem>{});
  last_serial_ = serial;
  recompute_offsets();
  return serial;
}

void MenuModel::delete_submenu(int serial) {
  if (is_deleted(serial)) {
    throw Error(ErrorCode::AlreadyDeleted, serial_text(serial) + " is already deleted");
  }
  if (!is_live(serial)) throw Error(ErrorCode::UnknownSerial, "no " + serial_text(serial));
  deleted_.push_back(serial);
  buttons_.erase(serial);
  items_.erase(serial);
  recompute_offsets();
}

void MenuModel::add_item(int serial, MenuItem item, std::optional<std::size_t> position) {
  require_live(serial);
  if (!item.is_separator()) check_text(item.label(), "menu item label");
  auto& list = items_.at(serial);
  const std::size_t count = list.size();
  if (!position || *position == count) {
    list.push_back(std::move(item));
    return;
  }
  if (*position > count) {
    throw Error(ErrorCode::IndexOutOfRange,
                "insert position " + std::to_string(*position) + " beyond " +
                    std::to_string(count) + " items of " + serial_text(serial));
  }
  // Grow by one and copy the backup of items j..count-1 into j+1..count.
  const std::vector<MenuItem> backup = list;
  list.resize(count + 1);
  for (std::size_t k = *position; k < count; ++k) list[k + 1] = backup[k];
  list[*position] = std::move(item);
}

void MenuModel::delete_item(int serial, std::size_t index) {
  require_live(serial);
  auto& list = items_.at(serial);
  const std::size_t count = list.size();
  if (index >= count) {
    throw Error(ErrorCode::IndexOutOfRange,
                "item " + std::to_string(index) + " out of range for " +
                    std::to_string(count) + " items of " + serial_text(serial));
  }
  if (index == count - 1) {
    list.pop_back();
    return;
  }
  // Copy the backup of items j+1..count-1 into j..count-2, then shrink.
  const std::vector<MenuItem> backup = list;
  for (std::size_t k = index; k + 1 < count; ++k) list[k] = backup[k + 1];
  list.pop_back();
}

SubmenuOrigin MenuModel::submenu_origin(int serial) const {
  require_live(serial);
  return {offsets_.at(serial), y0_};
}

std::vector<VisibleSubmenu> MenuModel::visible_submenus() const {
  std::vector<VisibleSubmenu> out;
  out.reserve(buttons_.size());
  for (const auto& [serial, b] : buttons_) {
    out.push_back({serial, b.title, b.width, {offsets_.at(serial), y0_}});
  }
  return out;
}

const std::vector<MenuItem>& MenuModel::items(int serial) const {
  require_live(serial);
  return items_.at(serial);
}

const SubmenuButton& MenuModel::button(int serial) const {
  require_live(serial);
  return buttons_.at(serial);
}

void MenuModel::recompute_offsets() {
  offsets_.clear();
  int x = 0;
  // buttons_ holds only live serials, in ascending order
  for (const auto& [serial, b] : buttons_) {
    offsets_[serial] = x;
    x += b.width;
  }
}

MenuModel MenuModel::restore(int y0, int last_serial, std::vector<SubmenuButton> buttons,
                             std::map<int, std::vector<MenuItem>> items,
                             std::vector<int> deleted) {
  auto invalid = [](const std::string& why) {
    throw Error(ErrorCode::Validation, "menu: " + why);
  };
  if (y0 < 0) invalid("y0 must be >= 0");
  MenuModel m(y0);
  m.last_serial_ = last_serial;
  for (int serial : deleted) {
    if (serial < 1 || serial > last_serial) {
      invalid("deleted serial " + std::to_string(serial) + " was never assigned");
    }
    if (m.is_deleted(serial)) {
      invalid("serial " + std::to_string(serial) + " deleted twice");
    }
    m.deleted_.push_back(serial);
  }
  for (auto& b : buttons) {
    if (b.serial < 1 || b.serial > last_serial) {
      invalid("serial " + std::to_string(b.serial) + " outside 1.." +
              std::to_string(last_serial));
    }
    if (m.is_deleted(b.serial)) {
      invalid("serial " + std::to_string(b.serial) + " is both live and deleted");
    }
    if (m.buttons_.contains(b.serial)) {
      invalid("duplicate serial " + std::to_string(b.serial));
    }
    if (b.width < 1) invalid("submenu width must be >= 1");
    check_text(b.title, "submenu title");
    if (items.contains(b.serial)) {
      for (const auto& item : items[b.serial]) {
        if (!item.is_separator()) check_text(item.label(), "menu item label");
      }
    }
    const int serial = b.serial;
    m.items_[serial] = items.contains(serial) ? std::move(items[serial])
                                              : std::vector<MenuItem>{};
    m.buttons_.emplace(serial, std::move(b));
  }
  for (const auto& [serial, list] : items) {
    if (!m.buttons_.contains(serial)) {
      invalid("items recorded for missing submenu " + std::to_string(serial));
    }
  }
  if (m.buttons_.size() + m.deleted_.size() != static_cast<std::size_t>(last_serial)) {
    invalid("serials 1.." + std::to_string(last_serial) +
            " must each be live or deleted");
  }
  m.recompute_offsets();
  return m;
}

}  // namespace tkdesign
