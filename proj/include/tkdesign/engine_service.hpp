#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "tkdesign/session.hpp"

namespace tkdesign {

// The engine as seen by a front end: trace lines in, JSON state out.
//
// Every accepted command is appended to a session trace in canonical form.
// Rejected commands are kept as "# rejected:" comments, followed by ABORT
// when the rejection also ended a gesture, so replaying the exported trace
// from the starting document reproduces the session's document exactly.
class EngineService {
 public:
  explicit EngineService(DesignDocument doc = DesignDocument{});

  // Runs one trace line and returns the response object:
  //   {"ok": bool, "notice": str|null, "error": {...}|null, "state": {...}}
  // Blank and comment lines are accepted and do nothing.
  std::string handle_line(std::string_view line);

  // {"mode", "tool", "grid", "grid_size", "snap", "lock", "preview",
  //  "selection", "trajectory", "document"}
  std::string state_json() const;

  // Downloads.
  std::string document_text() const;  // canonical document file
  std::string source_text() const;    // generated source of the current document
  const std::string& trace_text() const noexcept { return trace_; }

  const Session& session() const noexcept { return session_; }
  const DesignDocument& initial_document() const noexcept { return initial_; }

 private:
  DesignDocument initial_;
  Session session_;
  std::string trace_;
};

// Serves an EngineService over HTTP. Routes: POST /command (body: one trace
// line), GET /state, GET /document, GET /source, GET /trace. Requests are
// handled one at a time.
class HttpFront {
 public:
  explicit HttpFront(EngineService& service);
  ~HttpFront();
  HttpFront(const HttpFront&) = delete;
  HttpFront& operator=(const HttpFront&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws Io.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called from another thread.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tkdesign
