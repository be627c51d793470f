#include <mutex>

#include <httplib.h>

#include "tkdesign/engine_service.hpp"
#include "tkdesign/errors.hpp"

namespace tkdesign {

struct HttpFront::Impl {
  EngineService& service;
  httplib::Server server;
  std::mutex lock;  // the engine takes one command at a time

  explicit Impl(EngineService& s) : service(s) {}
};

namespace {

void reply(httplib::Response& res, const std::string& body, const char* type) {
  res.set_content(body, type);
  res.set_header("Access-Control-Allow-Origin", "*");
}

}  // namespace

HttpFront::HttpFront(EngineService& service) : impl_(std::make_unique<Impl>(service)) {
  Impl& im = *impl_;
  im.server.Post("/command", [&im](const httplib::Request& req, httplib::Response& res) {
    std::lock_guard guard(im.lock);
    std::string line = req.body;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    reply(res, im.service.handle_line(line), "application/json");
  });
  im.server.Get("/state", [&im](const httplib::Request&, httplib::Response& res) {
    std::lock_guard guard(im.lock);
    reply(res, im.service.state_json(), "application/json");
  });
  im.server.Get("/document", [&im](const httplib::Request&, httplib::Response& res) {
    std::lock_guard guard(im.lock);
    reply(res, im.service.document_text(), "application/json");
  });
  im.server.Get("/source", [&im](const httplib::Request&, httplib::Response& res) {
    std::lock_guard guard(im.lock);
    reply(res, im.service.source_text(), "text/x-python; charset=utf-8");
  });
  im.server.Get("/trace", [&im](const httplib::Request&, httplib::Response& res) {
    std::lock_guard guard(im.lock);
    reply(res, im.service.trace_text(), "text/plain; charset=utf-8");
  });
}

HttpFront::~HttpFront() { stop(); }

int HttpFront::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    throw Error(ErrorCode::Io, "cannot listen on " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpFront::run() { impl_->server.listen_after_bind(); }

void HttpFront::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace tkdesign
