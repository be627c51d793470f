// Command-line front end: validate, generate, replay, inspect, serve.
//
// Exit status: 0 success, 1 engine error (message on stderr), 2 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "tkdesign/codegen.hpp"
#include "tkdesign/engine_service.hpp"
#include "tkdesign/errors.hpp"
#include "tkdesign/persistence.hpp"
#include "tkdesign/session.hpp"

namespace {

using namespace tkdesign;

constexpr int kExitEngine = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "WxH" -> window of that size.
DesignDocument new_document(const std::string& size) {
  static const std::regex kSize(R"((\d{1,6})x(\d{1,6}))");
  std::smatch m;
  if (!std::regex_match(size, m, kSize)) {
    throw UsageError("--new expects WIDTHxHEIGHT, got '" + size + "'");
  }
  WindowSettings w;
  w.width = std::stoi(m[1]);
  w.height = std::stoi(m[2]);
  return DesignDocument(w);
}

void emit(const std::string& text, const std::string& out) {
  if (out == "-") {
    std::cout << text << std::flush;
  } else {
    write_text_file(out, text);
  }
}

void print_inspect(const DesignDocument& doc) {
  const auto& win = doc.window();
  std::printf("window %dx%d \"%s\"\n", win.width, win.height, win.title.c_str());
  std::printf("%-20s %-12s %6s %6s %6s %6s  %s\n", "name", "kind", "x0", "y0", "width",
              "height", "container");
  for (const auto& w : doc.widgets()) {
    std::printf("%-20s %-12s %6d %6d %6d %6d  %s\n", w.name.c_str(),
                std::string(kind_name(w.kind)).c_str(), w.rect.x0, w.rect.y0, w.rect.width,
                w.rect.height, w.container.c_str());
  }
  if (doc.menu()) {
    for (const auto& sub : doc.menu()->visible_submenus()) {
      std::printf("submenu %d \"%s\" x=%d y=%d width=%d items=%zu\n", sub.serial,
                  sub.title.c_str(), sub.origin.x, sub.origin.y, sub.width,
                  doc.menu()->items(sub.serial).size());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Headless GUI design engine: documents, traces and Tkinter codegen"};
  app.set_version_flag("--version", std::string("tkdesign ") + TKDESIGN_VERSION);
  app.require_subcommand(1);

  std::string doc_path;
  std::string out_path;
  std::string trace_path;
  std::string new_size;
  std::string host = "127.0.0.1";
  int port = 8765;

  auto* validate = app.add_subcommand("validate", "Load a document and check every rule");
  validate->add_option("doc", doc_path, "document file")->required();

  auto* gen = app.add_subcommand("generate", "Compile a document to Tkinter source");
  gen->add_option("doc", doc_path, "document file")->required();
  gen->add_option("-o,--output", out_path, "output file, - for standard output")
      ->default_val("-");

  auto* replay = app.add_subcommand("replay", "Replay a trace onto a document");
  replay->add_option("--new", new_size, "start from an empty WIDTHxHEIGHT window");
  std::vector<std::string> replay_args;
  replay->add_option("files", replay_args, "[doc] trace")->expected(1, 2)->required();
  replay->add_option("-o,--output", out_path, "write the resulting document here, - for stdout");

  auto* inspect = app.add_subcommand("inspect", "Print the widget table of a document");
  inspect->add_option("doc", doc_path, "document file")->required();

  auto* serve = app.add_subcommand("serve", "Run the engine as a local HTTP service");
  serve->add_option("--doc", doc_path, "document to start from");
  serve->add_option("--new", new_size, "start from an empty WIDTHxHEIGHT window");
  serve->add_option("--host", host, "listen address")->capture_default_str();
  serve->add_option("--port", port, "listen port")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) {
      const DesignDocument doc = load(doc_path);
      std::cerr << doc_path << ": ok (" << doc.widgets().size() << " widgets)\n";
    } else if (*gen) {
      emit(generate(load(doc_path)).str(), out_path);
    } else if (*inspect) {
      print_inspect(load(doc_path));
    } else if (*replay) {
      if (replay_args.size() == 2 && !new_size.empty()) {
        throw UsageError("give either a document or --new, not both");
      }
      if (replay_args.size() == 1 && new_size.empty()) {
        throw UsageError("replay needs a starting document or --new WIDTHxHEIGHT");
      }
      DesignDocument start =
          new_size.empty() ? load(replay_args[0]) : new_document(new_size);
      const InteractionTrace trace = load_trace(replay_args.back());
      const DesignDocument result = replay_trace(std::move(start), trace);
      if (!out_path.empty()) emit(serialize(result), out_path);
    } else if (*serve) {
      if (!doc_path.empty() && !new_size.empty()) {
        throw UsageError("give either --doc or --new, not both");
      }
      DesignDocument start = !doc_path.empty()  ? load(doc_path)
                             : !new_size.empty() ? new_document(new_size)
                                                 : DesignDocument{};
      EngineService service(std::move(start));
      HttpFront front(service);
      const int bound = front.bind(host, port);
      std::cerr << "serving on http://" << host << ":" << bound << "\n";
      front.run();
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ReplayError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitEngine;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitEngine;
  }
  return 0;
}
