#include <doctest.h>

#include "generators.hpp"
#include "test_util.hpp"
#include "tkdesign/persistence.hpp"
#include "tkdesign/properties.hpp"

using namespace tkdesign;

namespace {

DesignDocument sample() {
  DesignDocument doc;
  Widget f;
  f.kind = WidgetKind::Frame;
  f.name = "Frame1";
  f.rect = {100, 100, 100, 100};
  doc.add_widget(f);
  Widget b;
  b.kind = WidgetKind::Button;
  b.name = "Button1";
  b.rect = {60, 10, 50, 20};
  doc.add_widget(b);
  return doc;
}

}  // namespace

TEST_CASE("get_property reads structural fields and defaults") {
  const auto doc = sample();
  CHECK(get_property(doc, "Button1", "x0") == PropertyValue{60});
  CHECK(get_property(doc, "Button1", "y0") == PropertyValue{10});
  CHECK(get_property(doc, "Button1", "width") == PropertyValue{50});
  CHECK(get_property(doc, "Button1", "height") == PropertyValue{20});
  CHECK(get_property(doc, "Button1", "name") == PropertyValue{std::string("Button1")});
  CHECK(get_property(doc, "Button1", "container") == PropertyValue{std::string("self")});
  CHECK(get_property(doc, "Button1", "command") == PropertyValue{std::string()});
  CHECK(get_property(doc, "Button1", "relief") == PropertyValue{std::string("flat")});
  CHECK_THROWS_CODE(get_property(doc, "Button1", "length"), ErrorCode::UnsupportedProperty);
  CHECK_THROWS_CODE(get_property(doc, "Button1", "nope"), ErrorCode::UnknownProperty);
  CHECK_THROWS_CODE(get_property(doc, "Button9", "x0"), ErrorCode::UnknownName);
}

TEST_CASE("set_property then get_property returns the new value and notifies once") {
  auto doc = sample();
  ChangeNotifier notifier;
  std::vector<ChangeEvent> seen;
  const int id = notifier.subscribe([&](const ChangeEvent& e) { seen.push_back(e); });

  set_property(doc, "Button1", "text", std::string("Run"), &notifier);
  CHECK(get_property(doc, "Button1", "text") == PropertyValue{std::string("Run")});
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == ChangeEvent{"Button1", "text", std::string(), std::string("Run")});

  set_property(doc, "Button1", "x0", 20, &notifier);
  CHECK(doc.widget("Button1").rect == Rect{20, 10, 50, 20});
  set_property(doc, "Button1", "width", 60, &notifier);
  CHECK(doc.widget("Button1").rect.width == 60);
  set_property(doc, "Button1", "command", std::string("on_run"), &notifier);
  CHECK(doc.widget("Button1").command()->handler == "on_run");
  set_property(doc, "Button1", "container", std::string("Frame1"), &notifier);
  CHECK_THROWS_CODE(set_property(doc, "Button1", "container", std::string("Button1"), &notifier),
                    ErrorCode::Validation);
  set_property(doc, "Button1", "name", std::string("run"), &notifier);
  CHECK(doc.find("run") != nullptr);
  CHECK(seen.size() == 6);
  CHECK(seen.back().widget == "Button1");

  notifier.unsubscribe(id);
  set_property(doc, "run", "text", std::string("Go"), &notifier);
  CHECK(seen.size() == 6);
}

TEST_CASE("failed set_property changes nothing and emits nothing") {
  auto doc = sample();
  ChangeNotifier notifier;
  int calls = 0;
  notifier.subscribe([&](const ChangeEvent&) { ++calls; });
  const std::string before = serialize(doc);
  CHECK_THROWS_CODE(set_property(doc, "Button1", "y0", 90, &notifier), ErrorCode::Overlap);
  CHECK_THROWS_CODE(set_property(doc, "Button1", "x0", 390, &notifier), ErrorCode::OutOfBounds);
  CHECK_THROWS_CODE(set_property(doc, "Button1", "length", 3, &notifier),
                    ErrorCode::UnsupportedProperty);
  CHECK_THROWS_CODE(set_property(doc, "Button1", "padx", std::string("3"), &notifier),
                    ErrorCode::TypeMismatch);
  CHECK_THROWS_CODE(set_property(doc, "Button1", "name", std::string("Frame1"), &notifier),
                    ErrorCode::DuplicateName);
  CHECK_THROWS_CODE(set_property(doc, "Frame1", "command", std::string("h"), &notifier),
                    ErrorCode::UnsupportedProperty);
  CHECK(serialize(doc) == before);
  CHECK(calls == 0);
}

TEST_CASE("setting a property back to its default removes it") {
  auto doc = sample();
  set_property(doc, "Button1", "relief", std::string("raised"));
  CHECK(doc.widget("Button1").properties.size() == 1);
  set_property(doc, "Button1", "relief", std::string("flat"));
  CHECK(doc.widget("Button1").properties.empty());
}

TEST_CASE("observers run in subscription order") {
  ChangeNotifier n;
  std::string order;
  n.subscribe([&](const ChangeEvent&) { order += "a"; });
  n.subscribe([&](const ChangeEvent&) { order += "b"; });
  n.notify({});
  CHECK(order == "ab");
}

TEST_CASE("supports and list_properties delegate to the registry") {
  CHECK(supports(WidgetKind::Scale, "length"));
  CHECK_FALSE(supports(WidgetKind::Label, "command"));
  CHECK(list_properties(WidgetKind::Button) ==
        PropertyRegistry::standard().list_properties(WidgetKind::Button));
}

TEST_CASE("get after set round-trips for random values") {
  gen::Rng rng(31);
  const auto& reg = PropertyRegistry::standard();
  for (int i = 0; i < 500; ++i) {
    auto doc = sample();
    const WidgetKind kind = kRectKinds[static_cast<std::size_t>(gen::uniform(rng, 0, 14))];
    Widget w;
    w.kind = kind;
    w.name = "w";
    w.rect = {200, 10, 20, 20};
    doc.add_widget(w);
    for (const auto& d : reg.list_properties(kind)) {
      if (d.slot != PropertySlot::Free) continue;
      const PropertyValue v = gen::value_for(rng, d);
      set_property(doc, "w", d.name, v);
      REQUIRE(get_property(doc, "w", d.name) == v);
    }
  }
}
