// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "process.hpp"
#include "reference_table.hpp"
#include "tkdesign/codegen.hpp"
#include "tkdesign/interaction.hpp"
#include "tkdesign/menu_model.hpp"
#include "tkdesign/persistence.hpp"
#include "tkdesign/property_registry.hpp"
#include "tkdesign/session.hpp"

using namespace tkdesign;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances.
constexpr int kGeometryPairs = 10000;
constexpr double kGeometrySeconds = 1.0;
constexpr int kTraces = 1000;
constexpr int kMaxWidgetsPerTrace = 50;
constexpr int kSelectionCases = 1000;
constexpr int kMenuSequences = 1000;
constexpr int kRoundTripDocs = 1000;
constexpr std::size_t kThroughputLines = 1000;
constexpr double kThroughputSeconds = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome geometry_law() {
  gen::Rng rng(1001);
  DesignDocument base(WindowSettings{"", 1000, 1000});
  const auto t0 = Clock::now();
  for (int i = 0; i < kGeometryPairs; ++i) {
    const Point a{gen::uniform(rng, 0, 999), gen::uniform(rng, 0, 999)};
    Point b{gen::uniform(rng, 0, 999), gen::uniform(rng, 0, 999)};
    // zero extents commit at the prototype size; the law covers drawn extents
    if (b.x == a.x) b.x = a.x == 999 ? 998 : a.x + 1;
    if (b.y == a.y) b.y = a.y == 999 ? 998 : a.y + 1;
    auto doc = base;
    auto g = begin_draw(doc, WidgetKind::Frame, a);
    update_draw(g, b);
    const Widget w = commit_draw(doc, g);
    const Rect expected = oracle::draw_rect(a, b);
    if (w.rect != expected || w.rect.width != std::abs(b.x - a.x) ||
        w.rect.height != std::abs(b.y - a.y) || w.rect.x0 != std::min(a.x, b.x) ||
        w.rect.y0 != std::min(a.y, b.y)) {
      return fail("pair " + std::to_string(i) + " committed the wrong rect");
    }
  }
  const double s = seconds_since(t0);
  if (s >= kGeometrySeconds) return fail("took " + std::to_string(s) + " s");
  return {true, std::to_string(kGeometryPairs) + " pairs in " + std::to_string(s) + " s"};
}

Outcome non_overlap() {
  gen::Rng rng(1002);
  long successes = 0, rejects = 0;
  for (int t = 0; t < kTraces; ++t) {
    const int w = gen::uniform(rng, 200, 800);
    const int h = gen::uniform(rng, 200, 800);
    Session session{DesignDocument(WindowSettings{"", w, h})};
    const auto trace = gen::editing_trace(rng, w, h, gen::uniform(rng, 20, 200));
    for (std::size_t i = 0; i < trace.size(); ++i) {
      Command cmd = trace[i];
      const bool draws =
          std::holds_alternative<cmd::Release>(cmd) && session.mode() == SessionMode::Drawing;
      // cap the widget count by abandoning further draws
      if (draws && session.document().widgets().size() >= kMaxWidgetsPerTrace) cmd = cmd::Abort{};
      const std::string before = serialize(session.document());
      try {
        session.apply(cmd);
        ++successes;
        if (!oracle::all_disjoint(session.document())) {
          return fail("trace " + std::to_string(t) + " command " + std::to_string(i) +
                      " left overlapping widgets");
        }
      } catch (const Error&) {
        ++rejects;
        if (serialize(session.document()) != before) {
          return fail("trace " + std::to_string(t) + " command " + std::to_string(i) +
                      " changed the document on rejection");
        }
      }
    }
  }
  return {true, std::to_string(successes) + " accepted, " + std::to_string(rejects) +
                    " rejected commands"};
}

Outcome selection_oracle() {
  gen::Rng rng(1003);
  for (int i = 0; i < kSelectionCases; ++i) {
    const auto doc = gen::document(rng, {.max_widgets = 20, .properties = false, .menu = false});
    const Point a{gen::uniform(rng, -10, doc.window().width + 10),
                  gen::uniform(rng, -10, doc.window().height + 10)};
    const Point b{gen::uniform(rng, -10, doc.window().width + 10),
                  gen::uniform(rng, -10, doc.window().height + 10)};
    std::set<std::string> got;
    try {
      const auto sel = commit_select(doc, {a, b});
      got.insert(sel.names.begin(), sel.names.end());
      if (got.size() != sel.names.size()) return fail("duplicate names in case " + std::to_string(i));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptySelection) throw;
    }
    if (got != oracle::contained(doc, a, b)) return fail("case " + std::to_string(i) + " differs");
  }
  return {true, std::to_string(kSelectionCases) + " cases"};
}

Outcome menu_offsets() {
  gen::Rng rng(1004);
  long checks = 0;
  for (int seq = 0; seq < kMenuSequences; ++seq) {
    MenuModel m;
    oracle::NaiveMenu naive;
    const int ops = gen::uniform(rng, 1, 60);
    for (int i = 0; i < ops; ++i) {
      const int roll = gen::uniform(rng, 0, 9);
      const int serial = gen::uniform(rng, 1, std::max(1, m.last_serial() + 1));
      bool ok = true, naive_ok = true;
      if (roll < 3) {
        const int w = gen::uniform(rng, 1, 120);
        if (m.add_submenu("t", w) != naive.add_submenu("t", w)) return fail("serial mismatch");
      } else if (roll < 5) {
        try { m.delete_submenu(serial); } catch (const Error&) { ok = false; }
        naive_ok = naive.delete_submenu(serial);
      } else if (roll < 8) {
        const std::string label = "i" + std::to_string(i);
        const int pos = gen::chance(rng, 0.4) ? -1 : gen::uniform(rng, 0, 6);
        std::optional<std::size_t> p;
        if (pos >= 0) p = static_cast<std::size_t>(pos);
        try { m.add_item(serial, MenuItem::command(label), p); } catch (const Error&) { ok = false; }
        naive_ok = naive.add_item(serial, label, pos);
      } else {
        const int index = gen::uniform(rng, 0, 5);
        try { m.delete_item(serial, static_cast<std::size_t>(index)); } catch (const Error&) { ok = false; }
        naive_ok = naive.delete_item(serial, index);
      }
      if (ok != naive_ok) return fail("sequence " + std::to_string(seq) + " op " + std::to_string(i) + " outcome differs");
      const auto live = naive.live_serials();
      if (m.visible_submenus().size() != live.size()) return fail("live count differs");
      for (int s : live) {
        if (m.submenu_origin(s).x != naive.origin_x(s)) {
          return fail("origin of serial " + std::to_string(s) + " differs");
        }
        std::vector<std::string> labels;
        for (const auto& item : m.items(s)) labels.push_back(item.label());
        if (labels != naive.items(s)) return fail("items of serial " + std::to_string(s) + " differ");
        ++checks;
      }
    }
  }
  return {true, std::to_string(kMenuSequences) + " sequences, " + std::to_string(checks) + " checks"};
}

Outcome capability_matrix() {
  const auto& reg = PropertyRegistry::standard();
  // Independent read of the shipped fixture.
  std::istringstream in(slurp(std::string(TKDESIGN_SOURCE_DIR) + "/data/capability_matrix.txt"));
  std::string line;
  std::vector<std::string> columns;
  int cells = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string prop;
    row >> prop;
    if (prop == "property") {
      for (std::string c; row >> c;) columns.push_back(c);
      continue;
    }
    for (const auto& col : columns) {
      int bit = -1;
      row >> bit;
      const auto kind = parse_kind(col);
      if (!kind) return fail("unknown column " + col);
      if (reg.supports(*kind, prop) != (bit == 1)) return fail(col + "/" + prop + " differs from fixture");
      ++cells;
    }
  }
  if (cells != 21 * 15) return fail("fixture has " + std::to_string(cells) + " cells");
  for (const auto& [prop, kinds] : reference::capability_table()) {
    for (WidgetKind k : kRectKinds) {
      const bool expected =
          std::find(kinds.begin(), kinds.end(), std::string(kind_name(k))) != kinds.end();
      if (reg.supports(k, prop) != expected) {
        return fail(std::string(kind_name(k)) + "/" + prop + " differs from the reference table");
      }
    }
  }
  if (!reg.supports(WidgetKind::Scale, "length")) return fail("(Scale, length) not supported");
  if (reg.supports(WidgetKind::Button, "length")) return fail("(Button, length) supported");
  for (WidgetKind k : kRectKinds) {
    for (const char* p : {"width", "cursor", "background"}) {
      if (!reg.supports(k, p)) return fail(std::string(kind_name(k)) + " lacks " + p);
    }
  }
  return {true, std::to_string(cells) + " cells plus spot checks"};
}

Outcome codegen_round_trip() {
  gen::Rng rng(1006);
  for (int i = 0; i < kRoundTripDocs; ++i) {
    auto doc = gen::document(rng);
    // delete a submenu with a distinctive title
    const std::string ghost = "Ghost" + std::to_string(i) + "Title";
    if (gen::chance(rng, 0.5)) {
      MenuModel menu = doc.menu() ? *doc.menu() : MenuModel{};
      const int serial = menu.add_submenu(ghost, gen::uniform(rng, 1, 80));
      menu.add_item(serial, MenuItem::command(ghost + "Item"));
      menu.delete_submenu(serial);
      doc.set_menu(menu);
    }
    const auto a = generate(doc);
    const auto b = generate(doc);
    if (a != b) return fail("generate not deterministic for document " + std::to_string(i));
    const std::string text = a.str();
    if (text.find(ghost) != std::string::npos) return fail("deleted title emitted in document " + std::to_string(i));
    try {
      if (!round_trip_equal(doc, parse_generated(text))) return fail("document " + std::to_string(i) + " did not round-trip");
    } catch (const Error& e) {
      return fail("document " + std::to_string(i) + ": " + e.what());
    }
  }
  return {true, std::to_string(kRoundTripDocs) + " documents"};
}

Outcome throughput() {
  DesignDocument doc(WindowSettings{"big", 10000, 10000});
  for (int i = 0; i < 600; ++i) {
    auto g = begin_draw(doc, i % 2 ? WidgetKind::Label : WidgetKind::Button,
                        {(i % 40) * 200, (i / 40) * 100});
    update_draw(g, {(i % 40) * 200 + 150, (i / 40) * 100 + 60});
    commit_draw(doc, g);
  }
  const auto t0 = Clock::now();
  const auto src = generate(doc);
  const double s = seconds_since(t0);
  if (src.lines.size() <= kThroughputLines) return fail("only " + std::to_string(src.lines.size()) + " lines");
  if (s >= kThroughputSeconds) return fail("took " + std::to_string(s) + " s");
  return {true, std::to_string(src.lines.size()) + " lines in " + std::to_string(s) + " s"};
}

Outcome golden_end_to_end() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("tkdesign_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string doc = "\"" + (dir / "demo.doc.json").string() + "\"";
  const std::string py = "\"" + (dir / "demo.py").string() + "\"";
  Outcome out{true, "document and source byte-exact"};
  const auto r1 = run_command(cli() + " replay --new 400x300 " + source_path("data/demo.trace") + " -o " + doc);
  const auto r2 = r1.code == 0 ? run_command(cli() + " generate " + doc + " -o " + py) : r1;
  const std::string golden = std::string(TKDESIGN_SOURCE_DIR) + "/tests/golden/";
  if (r1.code != 0 || r2.code != 0) {
    out = fail("CLI failed: " + r1.err + r2.err);
  } else if (slurp(dir / "demo.doc.json") != slurp(golden + "demo.doc.json")) {
    out = fail("document differs from golden");
  } else if (slurp(dir / "demo.py") != slurp(golden + "demo.py")) {
    out = fail("source differs from golden");
  }
  fs::remove_all(dir);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"geometry law", geometry_law},
      {"non-overlap under random traces", non_overlap},
      {"selection oracle", selection_oracle},
      {"menu offsets and item lists", menu_offsets},
      {"capability matrix", capability_matrix},
      {"codegen round trip", codegen_round_trip},
      {"generation throughput", throughput},
      {"golden end-to-end via CLI", golden_end_to_end},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += !o.pass;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
