#include <doctest.h>

#include <unistd.h>

#include <filesystem>

#include "process.hpp"
#include "tkdesign/persistence.hpp"
#include "tkdesign/session.hpp"

using namespace tkdesign;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tkdesign_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return "\"" + (path / name).string() + "\""; }
  fs::path file(const std::string& name) const { return path / name; }
};

}  // namespace

TEST_CASE("--version") {
  const auto r = run_command(cli() + " --version");
  CHECK(r.code == 0);
  CHECK(r.out.find(TKDESIGN_VERSION) != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_command(cli()).code == 2);
  CHECK(run_command(cli() + " frobnicate").code == 2);
  CHECK(run_command(cli() + " generate").code == 2);
  CHECK(run_command(cli() + " replay --new 400x300").code == 2);
  CHECK(run_command(cli() + " replay --new 400by300 x.trace").code == 2);
  const auto both = run_command(cli() + " replay --new 400x300 a.json b.trace");
  CHECK(both.code == 2);
  CHECK(both.out.empty());
}

TEST_CASE("generate on an empty document writes prologue and epilogue to stdout") {
  TempDir tmp;
  save(DesignDocument{}, tmp.file("empty.json"));
  const auto r = run_command(cli() + " generate " + (tmp / "empty.json") + " -o -");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(std::string(TKDESIGN_SOURCE_DIR) + "/tests/golden/empty.py"));
  CHECK(r.err.empty());
  const auto file = run_command(cli() + " generate " + (tmp / "empty.json") + " -o " +
                                (tmp / "empty.py"));
  CHECK(file.code == 0);
  CHECK(file.out.empty());
  CHECK(slurp(tmp.file("empty.py")) == r.out);
}

TEST_CASE("validate reports overlap with exit 1") {
  TempDir tmp;
  write_text_file(tmp.file("bad.json"), R"({
  "format_version": 1,
  "window": {"title": "", "width": 400, "height": 300, "background": "white",
             "resizable_x": true, "resizable_y": true},
  "widgets": [
    {"name": "one", "kind": "Label", "container": "self", "x0": 0, "y0": 0, "width": 50, "height": 50, "properties": {}},
    {"name": "two", "kind": "Label", "container": "self", "x0": 10, "y0": 10, "width": 50, "height": 50, "properties": {}}
  ],
  "bindings": [],
  "menu": null,
  "name_counters": {}
})");
  const auto r = run_command(cli() + " validate " + (tmp / "bad.json"));
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("Overlap") != std::string::npos);
  CHECK(r.err.find("one") != std::string::npos);
  CHECK(r.err.find("two") != std::string::npos);

  save(DesignDocument{}, tmp.file("good.json"));
  CHECK(run_command(cli() + " validate " + (tmp / "good.json")).code == 0);
  CHECK(run_command(cli() + " validate " + (tmp / "missing.json")).code == 1);
}

TEST_CASE("replay matches in-process replay and reports the failing command") {
  TempDir tmp;
  const auto r = run_command(cli() + " replay --new 400x300 " + source_path("data/demo.trace") +
                             " -o " + (tmp / "out.json"));
  REQUIRE(r.code == 0);
  const auto in_process =
      replay_trace(DesignDocument{}, load_trace(std::string(TKDESIGN_SOURCE_DIR) + "/data/demo.trace"));
  CHECK(slurp(tmp.file("out.json")) == serialize(in_process));

  // replay onto an existing document
  write_text_file(tmp.file("more.trace"), "KIND Button\nPRESS 300 284\nRELEASE 340 298\n");
  const auto onto = run_command(cli() + " replay " + (tmp / "out.json") + " " +
                                (tmp / "more.trace") + " -o -");
  CHECK(onto.code == 0);
  CHECK(deserialize(onto.out).find("Button2") != nullptr);

  write_text_file(tmp.file("bad.trace"),
                  "KIND Button\nPRESS 10 10\nRELEASE 60 30\n# overlap next\nPRESS 20 20\nRELEASE 70 40\n");
  const auto bad = run_command(cli() + " replay --new 400x300 " + (tmp / "bad.trace"));
  CHECK(bad.code == 1);
  CHECK(bad.err.find("command 4") != std::string::npos);
  CHECK(bad.err.find("line 6") != std::string::npos);

  write_text_file(tmp.file("syntax.trace"), "KIND Button\nHOVER 1 2\n");
  const auto syn = run_command(cli() + " replay --new 400x300 " + (tmp / "syntax.trace"));
  CHECK(syn.code == 1);
  CHECK(syn.err.find("TraceParseError") != std::string::npos);
}

TEST_CASE("inspect prints the widget table") {
  TempDir tmp;
  run_command(cli() + " replay --new 400x300 " + source_path("data/demo.trace") + " -o " +
              (tmp / "out.json"));
  const auto r = run_command(cli() + " inspect " + (tmp / "out.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("name") != std::string::npos);
  CHECK(r.out.find("container") != std::string::npos);
  CHECK(r.out.find("Button1") != std::string::npos);
}
