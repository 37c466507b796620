#pragma once

#include <memory>
#include <optional>
#include <string>

#include "egoarena/service/manager.hpp"

namespace egoarena::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Bearer token required on every route but /health. Also accepted as
  // ?token= because browser EventSource cannot set headers.
  std::optional<std::string> token;
  int sse_wait_ms = 15000;  // keep-alive interval on idle event streams
};

// Routes:
//   GET  /health
//   POST /sessions                               create, 201
//   GET  /sessions                               list
//   GET  /sessions/{id}                          handle
//   GET  /sessions/{id}/state?participant=NAME   participant or "spectator" view
//   POST /sessions/{id}/actions                  {"participant": NAME, "action": {...}}
//   GET  /sessions/{id}/events                   text/event-stream; resume with
//                                                Last-Event-ID or ?after=N
//   GET  /reports                                MetricReports over finished sessions
class ArenaServer {
 public:
  ArenaServer(SessionManager& manager, ServerOptions options);
  ~ArenaServer();

  // Binds and returns the bound port; throws Error on failure.
  int bind();
  // Blocks until stop().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace egoarena::service
