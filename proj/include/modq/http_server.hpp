#ifndef MODQ_HTTP_SERVER_HPP
#define MODQ_HTTP_SERVER_HPP

#include <optional>
#include <string>

#include "httplib.h"
#include "modq/service.hpp"

namespace modq {

/// Routes for GameService:
///   POST /games, GET /games, GET /games/{id},
///   POST /games/{id}/moves, POST /games/{id}/undo
inline void install_routes(httplib::Server& server, GameService& service,
                           const std::optional<std::string>& static_dir = std::nullopt) {
  auto respond = [](httplib::Response& res, auto&& handler) {
    try {
      res.set_content(handler().dump(), "application/json");
    } catch (const ServiceError& e) {
      res.status = e.status();
      res.set_content(e.payload().dump(), "application/json");
    } catch (const json::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", "invalid_argument"}, {"message", e.what()}}.dump(), "application/json");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(json{{"error", "internal"}, {"message", e.what()}}.dump(), "application/json");
    }
  };
  auto body_of = [](const httplib::Request& req) { return req.body.empty() ? json::object() : json::parse(req.body); };

  server.Post("/games", [&service, respond, body_of](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] {
      res.status = 201;
      return service.create_game(body_of(req));
    });
  });
  server.Get("/games", [&service, respond](const httplib::Request&, httplib::Response& res) {
    respond(res, [&] { return service.list_games(); });
  });
  server.Get(R"(/games/([^/]+))", [&service, respond](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return service.get_state(req.matches[1]); });
  });
  server.Post(R"(/games/([^/]+)/moves)", [&service, respond, body_of](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return service.post_move(req.matches[1], body_of(req)); });
  });
  server.Post(R"(/games/([^/]+)/undo)", [&service, respond](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return service.undo(req.matches[1]); });
  });
  if (static_dir) server.set_mount_point("/", *static_dir);
}

}  // namespace modq

#endif
