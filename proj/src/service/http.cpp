#include "egoarena/service/http.hpp"

#include <httplib.h>

namespace egoarena::service {

using nlohmann::json;

struct ArenaServer::Impl {
  SessionManager& manager;
  ServerOptions options;
  httplib::Server server;
  int port = 0;

  Impl(SessionManager& m, ServerOptions o) : manager(m), options(std::move(o)) { routes(); }

  static void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  bool authorized(const httplib::Request& req) const {
    if (!options.token) return true;
    const std::string auth = req.get_header_value("Authorization");
    if (auth == "Bearer " + *options.token) return true;
    return req.has_param("token") && req.get_param_value("token") == *options.token;
  }

  // Wraps a handler with auth and error mapping.
  template <typename F>
  httplib::Server::Handler guarded(F f) {
    return [this, f](const httplib::Request& req, httplib::Response& res) {
      if (!authorized(req)) return send(res, 401, {{"error", "missing or invalid token"}});
      try {
        f(req, res);
      } catch (const ServiceError& e) {
        send(res, e.status(), e.body());
      } catch (const json::exception& e) {
        send(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
      } catch (const std::exception& e) {
        send(res, 500, {{"error", e.what()}});
      }
    };
  }

  static json body_of(const httplib::Request& req) {
    if (req.body.empty()) throw ServiceError(400, "request body is empty");
    return json::parse(req.body);
  }

  void stream_events(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.path_params.at("id");
    long after = 0;
    const std::string from = req.has_header("Last-Event-ID") ? req.get_header_value("Last-Event-ID")
                             : req.has_param("after")        ? req.get_param_value("after")
                                                             : "0";
    try {
      after = std::stol(from);
    } catch (const std::exception&) {
      throw ServiceError(400, "event id must be an integer", {{"fields", {{"after", from}}}});
    }
    manager.handle(id);  // 404 before the stream starts
    res.set_header("Cache-Control", "no-cache");
    const int wait = options.sse_wait_ms;
    res.set_chunked_content_provider("text/event-stream", [this, id, after, wait](std::size_t, httplib::DataSink& sink) mutable {
      while (sink.is_writable()) {
        const auto batch = manager.events(id, after, wait);
        for (const auto& e : batch) {
          const std::string chunk = "id: " + std::to_string(e.seq) + "\nevent: " + e.type + "\ndata: " + e.data.dump() + "\n\n";
          if (!sink.write(chunk.data(), chunk.size())) return false;
          after = e.seq;
        }
        if (batch.empty()) {
          if (manager.finished(id)) break;
          static const std::string ping = ": keep-alive\n\n";
          if (!sink.write(ping.data(), ping.size())) return false;
        }
      }
      sink.done();
      return true;
    });
  }

  void routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Authorization, Content-Type, Last-Event-ID"}});
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Get("/health", [](const httplib::Request&, httplib::Response& res) { send(res, 200, {{"ok", true}}); });
    server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  send(res, 201, manager.create(body_of(req)));
                }));
    server.Get("/sessions", guarded([this](const httplib::Request&, httplib::Response& res) {
                 send(res, 200, manager.list());
               }));
    server.Get("/sessions/:id", guarded([this](const httplib::Request& req, httplib::Response& res) {
                 send(res, 200, manager.handle(req.path_params.at("id")));
               }));
    server.Get("/sessions/:id/state", guarded([this](const httplib::Request& req, httplib::Response& res) {
                 if (!req.has_param("participant")) throw ServiceError(400, "participant query parameter is required");
                 send(res, 200, manager.state(req.path_params.at("id"), req.get_param_value("participant")));
               }));
    server.Post("/sessions/:id/actions", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const json body = body_of(req);
                  if (!body.is_object() || !body.contains("participant") || !body["participant"].is_string() ||
                      !body.contains("action"))
                    throw ServiceError(400, "expected {\"participant\": NAME, \"action\": {...}}");
                  send(res, 200, manager.submit(req.path_params.at("id"), body["participant"], body["action"]));
                }));
    server.Get("/sessions/:id/events", guarded([this](const httplib::Request& req, httplib::Response& res) {
                 stream_events(req, res);
               }));
    server.Get("/reports", guarded([this](const httplib::Request&, httplib::Response& res) {
                 send(res, 200, manager.reports());
               }));
  }
};

ArenaServer::ArenaServer(SessionManager& manager, ServerOptions options)
    : impl_(std::make_unique<Impl>(manager, std::move(options))) {}

ArenaServer::~ArenaServer() { stop(); }

int ArenaServer::bind() {
  if (impl_->options.port == 0)
    impl_->port = impl_->server.bind_to_any_port(impl_->options.host);
  else
    impl_->port = impl_->server.bind_to_port(impl_->options.host, impl_->options.port) ? impl_->options.port : -1;
  if (impl_->port <= 0) throw Error("cannot bind " + impl_->options.host + ":" + std::to_string(impl_->options.port));
  return impl_->port;
}

void ArenaServer::run() { impl_->server.listen_after_bind(); }

void ArenaServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace egoarena::service
