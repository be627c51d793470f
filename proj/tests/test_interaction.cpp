#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "test_util.hpp"
#include "tkdesign/interaction.hpp"
#include "tkdesign/persistence.hpp"

using namespace tkdesign;

TEST_CASE("begin_draw checks kind and point") {
  DesignDocument doc;
  const auto s = begin_draw(doc, WidgetKind::Button, {5, 5});
  CHECK(s.anchor == Point{5, 5});
  CHECK(s.current == Point{5, 5});
  CHECK_THROWS_CODE(begin_draw(doc, WidgetKind::Button, {-1, 0}), ErrorCode::PointOutsideCanvas);
  CHECK_THROWS_CODE(begin_draw(doc, WidgetKind::Button, {400, 0}), ErrorCode::PointOutsideCanvas);
  CHECK_THROWS_CODE(begin_draw(doc, WidgetKind::Button, {0, 300}), ErrorCode::PointOutsideCanvas);
  CHECK_NOTHROW(begin_draw(doc, WidgetKind::Button, {399, 299}));
  CHECK_THROWS_CODE(begin_draw(doc, WidgetKind::Menu, {5, 5}), ErrorCode::MenuNotDrawable);
}

TEST_CASE("update_draw previews the normalized rect") {
  DesignDocument doc;
  auto s = begin_draw(doc, WidgetKind::Button, {30, 40});
  CHECK(update_draw(s, {10, 90}) == Rect{10, 40, 20, 50});
  CHECK(s.current == Point{10, 90});
  auto z = begin_draw(doc, WidgetKind::Button, {0, 0});
  CHECK(update_draw(z, {0, 0}) == Rect{0, 0, 1, 1});
  auto v = begin_draw(doc, WidgetKind::Button, {7, 3});
  CHECK(update_draw(v, {7, 13}) == Rect{7, 3, 1, 10});
  // preview is not clamped
  CHECK(update_draw(v, {1000, -20}) == Rect{7, -20, 993, 23});
}

TEST_CASE("preview extents equal the absolute coordinate differences") {
  gen::Rng rng(51);
  DesignDocument doc(WindowSettings{"", 1000, 1000});
  for (int i = 0; i < 10000; ++i) {
    const Point a{gen::uniform(rng, 0, 999), gen::uniform(rng, 0, 999)};
    const Point b{gen::uniform(rng, -200, 1200), gen::uniform(rng, -200, 1200)};
    auto s = begin_draw(doc, WidgetKind::Label, a);
    const Rect r = update_draw(s, b);
    const Rect o = oracle::draw_rect(a, b);
    REQUIRE(r.x0 == o.x0);
    REQUIRE(r.y0 == o.y0);
    REQUIRE(r.width == std::max(1, o.width));
    REQUIRE(r.height == std::max(1, o.height));
  }
}

TEST_CASE("commit_draw adds an auto-named widget") {
  DesignDocument doc;
  auto s = begin_draw(doc, WidgetKind::Button, {10, 10});
  update_draw(s, {60, 30});
  const Widget w = commit_draw(doc, s);
  CHECK(w.name == "Button1");
  CHECK(w.rect == Rect{10, 10, 50, 20});
  CHECK(w.container == "self");
  CHECK(w.properties.empty());
  CHECK(doc.widget("Button1") == w);
}

TEST_CASE("a click without drag commits the prototype size") {
  DesignDocument doc;
  auto s = begin_draw(doc, WidgetKind::Label, {10, 10});
  CHECK(commit_draw(doc, s).rect == Rect{10, 10, 80, 24});
  auto c = begin_draw(doc, WidgetKind::Canvas, {200, 10});
  CHECK(commit_draw(doc, c).rect == Rect{200, 10, 120, 80});
  // zero extent in one direction only
  auto f = begin_draw(doc, WidgetKind::Text, {10, 150});
  update_draw(f, {50, 150});
  CHECK(commit_draw(doc, f).rect == Rect{10, 150, 40, 80});
  for (WidgetKind k : kRectKinds) {
    const Size p = prototype_size(k);
    const bool big = k == WidgetKind::Canvas || k == WidgetKind::Frame ||
                     k == WidgetKind::LabelFrame || k == WidgetKind::PanedWindow ||
                     k == WidgetKind::Listbox || k == WidgetKind::Text;
    CHECK(p.width == (big ? 120 : 80));
    CHECK(p.height == (big ? 80 : 24));
  }
}

TEST_CASE("commit clamps to the canvas and can snap to the grid") {
  DesignDocument doc;
  auto s = begin_draw(doc, WidgetKind::Button, {350, 280});
  update_draw(s, {500, 500});
  CHECK(commit_rect(doc, s) == Rect{350, 280, 50, 20});
  auto g = begin_draw(doc, WidgetKind::Button, {13, 17});
  update_draw(g, {56, 44});
  CHECK(commit_rect(doc, g, {true, 10}) == Rect{10, 20, 50, 20});
  CHECK(commit_rect(doc, g, {true, 25}) == Rect{25, 25, 25, 25});
  // a prototype widget that would leave the canvas is refused
  auto edge = begin_draw(doc, WidgetKind::Button, {390, 290});
  CHECK_THROWS_CODE(commit_draw(doc, edge), ErrorCode::OutOfBounds);
  CHECK(doc.widgets().empty());
}

TEST_CASE("an overlapping draw is refused and the document is unchanged") {
  DesignDocument doc;
  auto s = begin_draw(doc, WidgetKind::Button, {10, 10});
  update_draw(s, {60, 30});
  commit_draw(doc, s);
  const std::string before = serialize(doc);
  auto t = begin_draw(doc, WidgetKind::Button, {50, 20});
  update_draw(t, {90, 40});
  CHECK_THROWS_CODE(commit_draw(doc, t), ErrorCode::Overlap);
  CHECK(serialize(doc) == before);
  CHECK(doc.peek_auto_name(WidgetKind::Button) == "Button2");
}

TEST_CASE("selection is by full containment") {
  DesignDocument doc;
  for (const auto& [x, y] : {std::pair{10, 10}, {100, 10}, {10, 100}}) {
    auto s = begin_draw(doc, WidgetKind::Button, {x, y});
    update_draw(s, {x + 50, y + 20});
    commit_draw(doc, s);
  }
  CHECK(commit_select(doc, {{0, 0}, {399, 299}}).names ==
        std::vector<std::string>{"Button1", "Button2", "Button3"});
  CHECK(commit_select(doc, {{60, 30}, {10, 10}}).names == std::vector<std::string>{"Button1"});
  CHECK(commit_select(doc, {{150, 0}, {0, 30}}).names ==
        std::vector<std::string>{"Button1", "Button2"});
  CHECK(commit_select(doc, {{0, 0}, {399, 299}}).marked);
  CHECK_THROWS_CODE(commit_select(doc, {{20, 15}, {30, 25}}), ErrorCode::EmptySelection);
  CHECK_THROWS_CODE(commit_select(doc, {{11, 10}, {61, 30}}), ErrorCode::EmptySelection);
}

TEST_CASE("selection equals the brute-force containment scan") {
  gen::Rng rng(52);
  for (int i = 0; i < 1000; ++i) {
    const auto doc = gen::document(rng, {.max_widgets = 15, .properties = false, .menu = false});
    const Point a{gen::uniform(rng, -10, doc.window().width + 10),
                  gen::uniform(rng, -10, doc.window().height + 10)};
    const Point b{gen::uniform(rng, -10, doc.window().width + 10),
                  gen::uniform(rng, -10, doc.window().height + 10)};
    const auto expected = oracle::contained(doc, a, b);
    std::set<std::string> got;
    try {
      const auto sel = commit_select(doc, {a, b});
      got.insert(sel.names.begin(), sel.names.end());
      REQUIRE(got.size() == sel.names.size());
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::EmptySelection);
    }
    REQUIRE(got == expected);
  }
}

TEST_CASE("apply_move") {
  DesignDocument doc;
  auto draw = [&](int x, int y) {
    auto s = begin_draw(doc, WidgetKind::Button, {x, y});
    update_draw(s, {x + 20, y + 20});
    return commit_draw(doc, s).name;
  };
  const auto a = draw(10, 10);
  const auto b = draw(40, 10);
  const auto c = draw(100, 10);
  Selection one{{a}};
  apply_move(doc, one, 5, 0);
  CHECK(doc.widget(a).rect.x0 == 15);
  const std::string before = serialize(doc);
  apply_move(doc, one, 0, 0);
  CHECK(serialize(doc) == before);
  Selection two{{a, b}};
  CHECK_THROWS_CODE(apply_move(doc, two, 60, 0), ErrorCode::MoveCollision);
  CHECK(serialize(doc) == before);
  CHECK_THROWS_CODE(apply_move(doc, two, 0, -11), ErrorCode::MoveOutOfBounds);
  CHECK(serialize(doc) == before);
  CHECK_THROWS_CODE(apply_move(doc, Selection{{"ghost"}}, 1, 1), ErrorCode::UnknownName);
  apply_move(doc, two, 0, 100);
  CHECK(doc.widget(a).rect.y0 == 110);
  CHECK(doc.widget(b).rect.y0 == 110);
  CHECK(doc.widget(c).rect.y0 == 10);
}
