#ifndef MODQ_SERVICE_HPP
#define MODQ_SERVICE_HPP

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "modq/engine.hpp"
#include "modq/payload.hpp"
#include "modq/record.hpp"

namespace modq {

enum class PlayMode { Hotseat, VsEngine };

inline const char* to_string(PlayMode m) { return m == PlayMode::Hotseat ? "hotseat" : "vs-engine"; }

/// Error carrying an HTTP status and a machine-readable code.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& message)
      : std::runtime_error(message), status_(status), code_(std::move(code)) {}

  int status() const noexcept { return status_; }
  const std::string& code() const noexcept { return code_; }
  json payload() const { return {{"error", code_}, {"message", what()}}; }

 private:
  int status_;
  std::string code_;
};

struct Session {
  std::string id;
  Board board;
  PlayMode mode = PlayMode::Hotseat;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;
  bool logged = false;
  mutable std::mutex mu;

  Session(std::string id_, Board board_, PlayMode mode_) : id(std::move(id_)), board(std::move(board_)), mode(mode_) {}
};

/// In-memory game sessions. Requests on one session are serialized by the
/// session's mutex; different sessions proceed independently.
class GameService {
 public:
  explicit GameService(std::optional<std::filesystem::path> log_dir = std::nullopt) : log_dir_(std::move(log_dir)) {}

  json create_game(const json& body) {
    const auto [n, variant, mode] = parse_create(body);
    std::optional<Board> board;
    try {
      board.emplace(n, variant);
    } catch (const Error& e) {
      throw ServiceError(400, to_string(e.code()), e.what());
    }
    auto session = std::make_shared<Session>(next_id(), std::move(*board), mode);
    session->created_ms = session->updated_ms = now_ms();
    {
      std::unique_lock lock(sessions_mu_);
      sessions_.emplace(session->id, session);
    }
    std::lock_guard lock(session->mu);
    return view(*session);
  }

  json list_games() const {
    json games = json::array();
    std::shared_lock lock(sessions_mu_);
    for (const auto& [id, session] : sessions_) {
      std::lock_guard session_lock(session->mu);
      games.push_back(summary(*session));
    }
    return {{"games", std::move(games)}};
  }

  json get_state(const std::string& id) const {
    auto session = find(id);
    std::lock_guard lock(session->mu);
    return view(*session);
  }

  json post_move(const std::string& id, const json& body) {
    auto session = find(id);
    std::lock_guard lock(session->mu);
    Board& board = session->board;
    const Move move = parse_move(body, board);
    if (auto why = board.violation(move)) throw ServiceError(422, "illegal_move", *why);
    board.apply(move);
    std::optional<EngineChoice> reply;
    if (session->mode == PlayMode::VsEngine && !board.is_terminal()) {
      reply = choose_engine_move(board);
      if (reply) board.apply(reply->move);
    }
    session->updated_ms = now_ms();
    maybe_log(*session);
    json out = view(*session);
    if (reply) {
      out["engine_move"] = move_json(reply->move);
      out["engine_exact"] = reply->exact;
    } else {
      out["engine_move"] = nullptr;
    }
    return out;
  }

  /// One ply in hotseat; in vs-engine mode back to the human's turn.
  json undo(const std::string& id) {
    auto session = find(id);
    std::lock_guard lock(session->mu);
    Board& board = session->board;
    if (board.history().empty()) throw ServiceError(409, "empty_history", "no move to undo");
    board.undo();
    if (session->mode == PlayMode::VsEngine && player_to_move(board) == 2) board.undo();
    session->updated_ms = now_ms();
    return view(*session);
  }

 private:
  struct CreateParams {
    int n;
    GameVariant variant;
    PlayMode mode;
  };

  static CreateParams parse_create(const json& body) {
    if (!body.is_object()) throw ServiceError(400, "invalid_argument", "request body must be a JSON object");
    try {
      if (!body.contains("n") || !body["n"].is_number_integer())
        throw ServiceError(400, "invalid_argument", "field 'n' must be an integer");
      const int n = body["n"].get<int>();
      if (n < 1) throw ServiceError(400, "invalid_argument", "n must be >= 1");
      if (n > 32) throw ServiceError(400, "invalid_argument", "n must be <= 32");
      GameVariant variant;
      variant.kind = parse_variant_kind(body.value("variant", std::string("Standard")));
      variant.modulus = body.value("k", 2);
      if (body.contains("seed") && !body["seed"].is_null()) {
        const json& seed = body["seed"];
        if (!seed.is_array() || seed.size() != 2 || !seed[0].is_number_integer() || !seed[1].is_number_integer())
          throw ServiceError(400, "invalid_argument", "seed must be [row, col]");
        variant.seed = Square{seed[0].get<int>(), seed[1].get<int>()};
      }
      const std::string mode = body.value("mode", std::string("hotseat"));
      PlayMode play_mode;
      if (mode == "hotseat") {
        play_mode = PlayMode::Hotseat;
      } else if (mode == "vs-engine") {
        play_mode = PlayMode::VsEngine;
      } else {
        throw ServiceError(400, "invalid_argument", "mode must be 'hotseat' or 'vs-engine'");
      }
      variant.validate(n);
      return {n, variant, play_mode};
    } catch (const Error& e) {
      throw ServiceError(400, to_string(e.code()), e.what());
    } catch (const json::exception& e) {
      throw ServiceError(400, "invalid_argument", e.what());
    }
  }

  static Move parse_move(const json& body, const Board& board) {
    if (!body.is_object() || !body.contains("row") || !body.contains("col") || !body["row"].is_number_integer() ||
        !body["col"].is_number_integer())
      throw ServiceError(400, "invalid_argument", "move needs integer 'row' and 'col'");
    Move m;
    m.at = {body["row"].get<int>(), body["col"].get<int>()};
    const std::string fallback = board.variant().kind == VariantKind::Complementary ? "remove" : "place";
    const std::string action = body.value("action", fallback);
    if (action == "place") {
      m.action = Action::Place;
    } else if (action == "remove") {
      m.action = Action::Remove;
    } else {
      throw ServiceError(400, "invalid_argument", "action must be 'place' or 'remove'");
    }
    return m;
  }

  std::shared_ptr<Session> find(const std::string& id) const {
    std::shared_lock lock(sessions_mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ServiceError(404, "not_found", "no game with id '" + id + "'");
    return it->second;
  }

  static json summary(const Session& s) {
    json out = variant_fields(s.board.size(), s.board.variant());
    out["id"] = s.id;
    out["mode"] = to_string(s.mode);
    out["class"] = to_string(s.board.classify());
    out["moves"] = s.board.history().size();
    out["created_ms"] = s.created_ms;
    out["updated_ms"] = s.updated_ms;
    return out;
  }

  static json view(const Session& s) {
    json out = state_payload(s.board);
    out["id"] = s.id;
    out["mode"] = to_string(s.mode);
    out["created_ms"] = s.created_ms;
    out["updated_ms"] = s.updated_ms;
    return out;
  }

  void maybe_log(Session& s) const {
    if (!log_dir_ || s.logged || !s.board.is_terminal()) return;
    std::error_code ec;
    std::filesystem::create_directories(*log_dir_, ec);
    std::ofstream out(*log_dir_ / (s.id + ".txt"), std::ios::app);
    out << format_record(record_of(s.board));
    s.logged = static_cast<bool>(out);
  }

  std::string next_id() {
    char buf[32];
    std::snprintf(buf, sizeof buf, "g%08llx", static_cast<unsigned long long>(++counter_));
    return buf;
  }

  static std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
        .count();
  }

  std::optional<std::filesystem::path> log_dir_;
  mutable std::shared_mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<std::uint64_t> counter_{0};
};

}  // namespace modq

#endif
