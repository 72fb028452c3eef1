#ifndef MODQ_PAYLOAD_HPP
#define MODQ_PAYLOAD_HPP

#include <nlohmann/json.hpp>

#include "modq/board.hpp"
#include "modq/solver.hpp"

namespace modq {

using json = nlohmann::json;

inline json move_json(const Move& m) {
  return {{"action", m.action == Action::Place ? "place" : "remove"}, {"row", m.at.row}, {"col", m.at.col}};
}

inline json variant_fields(int n, const GameVariant& v) {
  json out = {{"n", n}, {"variant", to_string(v.kind)}, {"k", v.modulus}};
  out["seed"] = v.seed ? json::array({v.seed->row, v.seed->col}) : json(nullptr);
  return out;
}

/// Player (1 or 2) whose turn it is. Setup steps are not moves.
inline int player_to_move(const Board& board) { return board.history().size() % 2 == 0 ? 1 : 2; }

/// Full state of a board on the wire. square_status is "open" exactly on the
/// squares of legal_moves(); in the complementary game that marks removable queens.
inline json state_payload(const Board& board) {
  json out = variant_fields(board.size(), board.variant());
  json occupancy = json::array();
  json status = json::array();
  std::vector<std::uint8_t> legal(board.square_count(), 0);
  board.for_each_legal_move([&](const Move& m) { legal[m.at.index(board.size())] = 1; });
  for (int r = 1; r <= board.size(); ++r) {
    json row = json::array();
    for (int c = 1; c <= board.size(); ++c) {
      const Square s{r, c};
      if (board.occupied(s)) occupancy.push_back({r, c});
      if (legal[s.index(board.size())]) {
        row.push_back("open");
      } else {
        row.push_back(board.occupied(s) ? "queen" : "closed");
      }
    }
    status.push_back(std::move(row));
  }
  out["occupancy"] = std::move(occupancy);
  out["square_status"] = std::move(status);
  const BoardClass cls = board.classify();
  out["class"] = to_string(cls);
  out["to_move"] = player_to_move(board);
  json history = json::array();
  for (const Move& m : board.history()) history.push_back(move_json(m));
  out["history"] = std::move(history);
  const bool over = cls != BoardClass::Unlocked;
  out["game_over"] = over;
  out["loser"] = over ? json(player_to_move(board)) : json(nullptr);
  return out;
}

inline json stats_json(const EnumerationStats& s) {
  json out = {{"leaf_count", s.leaf_count},       {"min_depth", s.min_depth},
              {"max_depth", s.max_depth},         {"leaves_by_depth", s.leaves_by_depth},
              {"truncated", s.truncated},         {"terminal_orbits", s.terminal_orbits},
              {"positions_visited", s.positions_visited}};
  out["terminal_positions"] = s.terminal_positions ? json(*s.terminal_positions) : json(nullptr);
  return out;
}

}  // namespace modq

#endif
