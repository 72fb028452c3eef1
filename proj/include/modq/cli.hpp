#ifndef MODQ_CLI_HPP
#define MODQ_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modq/claims.hpp"
#include "modq/constructions.hpp"
#include "modq/dot.hpp"
#include "modq/engine.hpp"
#include "modq/http_server.hpp"
#include "modq/payload.hpp"
#include "modq/solver.hpp"
#include "modq/text_format.hpp"

namespace modq::cli {

enum ExitCode { kSuccess = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

struct GameOptions {
  int n = 3;
  std::string variant = "Standard";
  int k = 2;
  std::string seed;
  bool allow_large = false;

  GameVariant to_variant() const {
    GameVariant v;
    v.kind = parse_variant_kind(variant);
    v.modulus = k;
    if (!seed.empty()) {
      const auto comma = seed.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--seed must be <row>,<col>");
      try {
        v.seed = Square{std::stoi(seed.substr(0, comma)), std::stoi(seed.substr(comma + 1))};
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "--seed must be <row>,<col>");
      }
    }
    v.validate(n);
    return v;
  }
};

inline void add_game_options(CLI::App* app, GameOptions& o) {
  app->add_option("--n", o.n, "Board side length")->check(CLI::PositiveNumber);
  app->add_option("--variant", o.variant, "Standard | AlternateUniverse | Complementary");
  app->add_option("--k", o.k, "Modulus of the open-square rule")->check(CLI::Range(2, 1000));
  app->add_option("--seed", o.seed, "Seed square <row>,<col> for AlternateUniverse and Complementary");
  app->add_flag("--allow-large", o.allow_large, "Lift the n<=4 guard on exhaustive searches");
}

/// Board text format followed by the attacker-count residues, '*' on queens.
inline std::string render(const Board& board) {
  std::string out = format_board(board);
  const auto cells = board.parity_map();
  out += "parity:\n";
  for (int r = 0; r < board.size(); ++r) {
    for (int c = 0; c < board.size(); ++c) {
      const ParityCell& cell = cells[r * board.size() + c];
      out += cell.occupied ? std::string("*") : std::to_string(cell.residue);
    }
    out += "\n";
  }
  return out;
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  file << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

inline std::string move_text(const std::optional<Move>& m) {
  return m ? std::to_string(m->at.row) + "," + std::to_string(m->at.col) : std::string("none");
}

inline GameRecord construct(const std::string& kind, int n) {
  if (kind == "frame-fill") return frame_fill_sequence(n);
  if (kind == "odd-complete") return odd_complete_sequence(n);
  if (kind == "odd-locked") return odd_locked_sequence(n);
  if (kind == "even-locked") return even_locked_sequence(n);
  if (kind == "even-near-complete") return even_near_complete_sequence(n);
  throw Error(ErrorCode::InvalidArgument, "unknown construction '" + kind + "'");
}

/// Interactive game on `in`/`out`. Input lines: "<row> <col>", "undo", "board", "quit".
inline int play(const Board& start, bool vs_engine, std::istream& in, std::ostream& out) {
  Board board = start;
  out << render(board);
  auto announce_end = [&] {
    out << "game over: " << to_string(board.classify()) << "; player " << player_to_move(board) << " cannot move and loses\n";
  };
  if (board.is_terminal()) {
    announce_end();
    return kSuccess;
  }
  std::string line;
  while (true) {
    out << "player " << player_to_move(board) << "> " << std::flush;
    if (!std::getline(in, line)) break;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "quit") break;
    if (first == "board") {
      out << render(board);
      continue;
    }
    if (first == "undo") {
      if (board.history().empty()) {
        out << "nothing to undo\n";
        continue;
      }
      board.undo();
      if (vs_engine && player_to_move(board) == 2) board.undo();
      out << render(board);
      continue;
    }
    int row = 0, col = 0;
    std::string rest;
    try {
      row = std::stoi(first);
    } catch (const std::exception&) {
      out << "enter '<row> <col>', 'undo', 'board' or 'quit'\n";
      continue;
    }
    if (!(words >> col) || (words >> rest)) {
      out << "enter '<row> <col>', 'undo', 'board' or 'quit'\n";
      continue;
    }
    const Action action = board.variant().kind == VariantKind::Complementary ? Action::Remove : Action::Place;
    const Move m{action, {row, col}};
    if (auto why = board.violation(m)) {
      out << "illegal: " << *why << "\n";
      continue;
    }
    board.apply(m);
    if (vs_engine && !board.is_terminal()) {
      const auto reply = choose_engine_move(board);
      board.apply(reply->move);
      out << "engine plays " << reply->move.at.row << " " << reply->move.at.col
          << (reply->exact ? " (exact)" : " (heuristic, not optimal)") << "\n";
    }
    out << render(board);
    if (board.is_terminal()) {
      announce_end();
      break;
    }
  }
  return kSuccess;
}

inline int run(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Engine, solver and play environment for the mod k n-queens game", "modq"};
  app.require_subcommand(1);

  GameOptions game;
  std::string out_path;

  auto* play_cmd = app.add_subcommand("play", "Play in the terminal");
  add_game_options(play_cmd, game);
  std::string mode = "hotseat";
  play_cmd->add_option("--mode", mode, "hotseat | vs-engine")->check(CLI::IsMember({"hotseat", "vs-engine"}));

  auto* construct_cmd = app.add_subcommand("construct", "Emit a constructive move record");
  std::string kind;
  construct_cmd->add_option("--kind", kind, "frame-fill | odd-complete | odd-locked | even-locked | even-near-complete")
      ->required();
  construct_cmd->add_option("--n", game.n, "Board side length")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the claim suite or replay a record file");
  std::string claims = "all";
  int max_n = 11;
  std::string record_path;
  verify_cmd->add_option("--claims", claims, "Comma-separated claim names, or 'all'");
  verify_cmd->add_option("--max-n", max_n, "Largest board size for constructive claims")->check(CLI::Range(1, 64));
  verify_cmd->add_option("--record", record_path, "Replay this record file instead");

  auto* solve_cmd = app.add_subcommand("solve", "Exact analysis of small boards");
  add_game_options(solve_cmd, game);
  std::string query = "value";
  std::string report_path;
  solve_cmd->add_option("--query", query, "value | max-locked | min-locked | states | all")
      ->check(CLI::IsMember({"value", "max-locked", "min-locked", "states", "all"}));
  solve_cmd->add_option("--report", report_path, "Also write a JSON report");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count games in the game tree");
  add_game_options(enumerate_cmd, game);
  std::optional<int> depth_limit;
  bool no_symmetry = false;
  enumerate_cmd->add_option("--depth-limit", depth_limit, "Stop after this many plies")->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_flag("--no-symmetry", no_symmetry, "Memoize on raw positions and count raw terminal positions");
  enumerate_cmd->add_option("--report", report_path, "Also write a JSON report");

  auto* graph_cmd = app.add_subcommand("graph", "Build the symmetry-merged game graph");
  add_game_options(graph_cmd, game);
  std::string dot_path;
  graph_cmd->add_option("--dot", dot_path, "Write Graphviz DOT here (default stdout)");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP game service");
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string log_dir;
  std::string static_dir;
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--log-dir", log_dir, "Append finished games here as record files");
  serve_cmd->add_option("--static-dir", static_dir, "Serve static files (the web client) from here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*play_cmd) {
      return play(Board(game.n, game.to_variant()), mode == "vs-engine", in, out);
    }
    if (*construct_cmd) {
      write_output(out_path, format_record(construct(kind, game.n)), out);
      return kSuccess;
    }
    if (*verify_cmd) {
      if (!record_path.empty()) {
        const GameRecord record = parse_record(read_file(record_path));
        const auto rep = verify_sequence(record);
        out << "legal=" << (rep.legal ? "true" : "false") << "\n";
        if (!rep.legal) out << "first_illegal=" << *rep.first_illegal + 1 << "\nreason=" << rep.reason << "\n";
        out << "final_class=" << to_string(rep.final_class) << "\nqueens=" << rep.queens << "\n";
        return rep.legal ? kSuccess : kFailure;
      }
      std::vector<std::string> names;
      if (claims == "all") {
        names = claim_names();
      } else {
        std::stringstream ss(claims);
        for (std::string name; std::getline(ss, name, ',');) names.push_back(name);
      }
      bool all = true;
      for (const auto& name : names) {
        const ClaimResult r = check_claim(name, max_n);
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all = all && r.passed;
      }
      return all ? kSuccess : kFailure;
    }
    if (*solve_cmd) {
      const GameVariant variant = game.to_variant();
      json report = variant_fields(game.n, variant);
      report["query"] = query;
      auto emit = [&](const std::string& key, const std::string& value) { out << key << "=" << value << "\n"; };
      if (query == "value" || query == "all") {
        const auto r = solve_game(game.n, variant, {MemoMode::Canonical, game.allow_large});
        emit("value", to_string(r.value));
        emit("best_move", move_text(r.best_move));
        emit("node_count", std::to_string(r.node_count));
        report["value"] = to_string(r.value);
        report["best_move"] = r.best_move ? move_json(*r.best_move) : json(nullptr);
        report["node_count"] = r.node_count;
      }
      auto extremal = [&](const std::string& name, const std::optional<ExtremalResult>& r) {
        emit(name, r ? std::to_string(r->count) : std::string("none"));
        report[name] = r ? json(r->count) : json(nullptr);
        if (r) {
          std::string moves;
          for (const Move& m : r->witness.moves) moves += (moves.empty() ? "" : " ") + move_text(m);
          emit(name + "_witness", moves);
          json witness = json::array();
          for (const Move& m : r->witness.moves) witness.push_back(move_json(m));
          report[name + "_witness"] = std::move(witness);
        }
      };
      if (query == "max-locked" || query == "all") extremal("max_locked", max_locked_queens(game.n, variant, game.allow_large));
      if (query == "min-locked" || query == "all") extremal("min_locked", min_locked_queens(game.n, variant, game.allow_large));
      if (query == "states" || query == "all") {
        const auto c = count_reachable_states(game.n, variant, game.allow_large);
        emit("states_raw", std::to_string(c.raw));
        emit("states_canonical", std::to_string(c.canonical));
        report["states_raw"] = c.raw;
        report["states_canonical"] = c.canonical;
      }
      if (!report_path.empty()) write_output(report_path, report.dump(2) + "\n", out);
      return kSuccess;
    }
    if (*enumerate_cmd) {
      const GameVariant variant = game.to_variant();
      const auto s = enumerate_games(game.n, variant, {!no_symmetry, depth_limit, game.allow_large});
      out << "leaf_count=" << s.leaf_count << "\nmin_depth=" << s.min_depth << "\nmax_depth=" << s.max_depth
          << "\ntruncated=" << s.truncated << "\nterminal_orbits=" << s.terminal_orbits << "\n";
      if (s.terminal_positions) out << "terminal_positions=" << *s.terminal_positions << "\n";
      for (std::size_t d = 0; d < s.leaves_by_depth.size(); ++d) {
        if (s.leaves_by_depth[d]) out << "leaves_at_depth_" << d << "=" << s.leaves_by_depth[d] << "\n";
      }
      if (!report_path.empty()) {
        json report = variant_fields(game.n, variant);
        report["enumeration"] = stats_json(s);
        write_output(report_path, report.dump(2) + "\n", out);
      }
      return kSuccess;
    }
    if (*graph_cmd) {
      const GameGraph graph = build_game_graph(game.n, game.to_variant(), game.allow_large);
      std::size_t locked = 0, complete = 0;
      for (const auto& node : graph.nodes) {
        locked += node.cls == BoardClass::Locked;
        complete += node.cls == BoardClass::Complete;
      }
      if (!dot_path.empty()) {
        write_output(dot_path, export_dot(graph), out);
        out << "nodes=" << graph.nodes.size() << "\nedges=" << graph.edges.size() << "\nlocked=" << locked
            << "\ncomplete=" << complete << "\n";
      } else {
        out << export_dot(graph);
      }
      return kSuccess;
    }
    if (*serve_cmd) {
      GameService service(log_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(log_dir));
      httplib::Server server;
      install_routes(server, service, static_dir.empty() ? std::nullopt : std::optional<std::string>(static_dir));
      out << "listening on http://" << host << ":" << port << std::endl;
      if (!server.listen(host, port)) {
        err << "error: cannot listen on " << host << ":" << port << "\n";
        return kFailure;
      }
      return kSuccess;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::BudgetExceeded: return kBudget;
      case ErrorCode::InvalidArgument: return kUsage;
      default: return kFailure;
    }
  }
  return kUsage;
}

}  // namespace modq::cli

#endif
