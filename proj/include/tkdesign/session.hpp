#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkdesign/codegen.hpp"
#include "tkdesign/design_model.hpp"
#include "tkdesign/interaction.hpp"
#include "tkdesign/properties.hpp"
#include "tkdesign/trace.hpp"

namespace tkdesign {

enum class SessionMode {
  Idle,          // waiting for a press, a tool change or a panel edit
  Drawing,       // press..release of a draw gesture
  Selecting,     // press..release of a selection box
  FunctionMenu,  // selection committed; Move/Design/Delete/OK/Cancel pending
  MoveDrag,      // FUNC MOVE without a delta: the next press..release moves
};

std::string_view to_string(SessionMode mode) noexcept;

// One editing session over a document: the four-phase gesture state machine
// plus the panel edits, fed one command at a time.
//
// apply() either succeeds or throws Error. A failed command leaves the
// document unchanged; a failed release discards the gesture it ends.
class Session {
 public:
  explicit Session(DesignDocument doc = DesignDocument{});

  // Returns a notice for non-fatal outcomes (an empty selection box).
  std::optional<std::string> apply(const Command& command);

  const DesignDocument& document() const noexcept { return doc_; }
  SessionMode mode() const noexcept { return mode_; }
  // Current drawing tool; nullopt means the selection tool.
  std::optional<WidgetKind> tool() const noexcept { return tool_; }

  bool grid_visible() const noexcept { return grid_; }
  int grid_size() const noexcept { return grid_size_; }
  bool snap() const noexcept { return snap_; }
  bool locked() const noexcept { return lock_; }

  // Rubber band of the gesture in progress, if any.
  std::optional<Rect> preview() const;
  // Set while the function menu is open.
  const std::optional<Selection>& selection() const noexcept { return selection_; }
  // Pointer path of a move drag in progress, starting at its press point.
  const std::vector<Point>& trajectory() const noexcept { return trajectory_; }
  // Net translation applied to the selection since it was committed.
  Point move_delta() const noexcept { return move_delta_; }

  // Output of the most recent COMPILE.
  const std::optional<SourceText>& last_source() const noexcept { return source_; }

  ChangeNotifier& notifier() noexcept { return notifier_; }

 private:
  std::optional<std::string> on(const cmd::SetWindow& c);
  std::optional<std::string> on(const cmd::SetWindowField& c);
  std::optional<std::string> on(const cmd::ChooseKind& c);
  std::optional<std::string> on(const cmd::SelectTool& c);
  std::optional<std::string> on(const cmd::Press& c);
  std::optional<std::string> on(const cmd::Drag& c);
  std::optional<std::string> on(const cmd::Release& c);
  std::optional<std::string> on(const cmd::Abort& c);
  std::optional<std::string> on(const cmd::Function& c);
  std::optional<std::string> on(const cmd::SetProperty& c);
  std::optional<std::string> on(const cmd::BindEvent& c);
  std::optional<std::string> on(const cmd::MenuAddSubmenu& c);
  std::optional<std::string> on(const cmd::MenuDeleteSubmenu& c);
  std::optional<std::string> on(const cmd::MenuAddItem& c);
  std::optional<std::string> on(const cmd::MenuDeleteItem& c);
  std::optional<std::string> on(const cmd::Grid& c);
  std::optional<std::string> on(const cmd::Snap& c);
  std::optional<std::string> on(const cmd::Lock& c);
  std::optional<std::string> on(const cmd::Compile& c);

  void require_mode(std::initializer_list<SessionMode> allowed, std::string_view what) const;
  void require_inside(Point p) const;
  void close_function_menu();
  template <typename F>
  void edit_menu(F&& f);

  DesignDocument doc_;
  SessionMode mode_ = SessionMode::Idle;
  std::optional<WidgetKind> tool_;
  bool grid_ = false;
  int grid_size_ = 10;
  bool snap_ = false;
  bool lock_ = false;

  std::optional<GestureState> draw_;
  std::optional<SelectionRect> select_;
  std::optional<Selection> selection_;
  std::optional<DesignDocument> before_selection_;
  std::vector<Point> trajectory_;
  Point move_delta_;
  std::optional<SourceText> source_;
  ChangeNotifier notifier_;
};

// Applies the commands in order through a fresh Session. A function menu left
// open at the end counts as confirmed; an unfinished gesture is dropped.
// Throws ReplayError naming the failing command.
DesignDocument replay_trace(DesignDocument doc, const InteractionTrace& trace);

}  // namespace tkdesign
