#ifndef MODQ_ENGINE_HPP
#define MODQ_ENGINE_HPP

#include <optional>

#include "modq/board.hpp"
#include "modq/solver.hpp"

namespace modq {

struct EngineChoice {
  Move move;
  /// True when the move came from the exact solver.
  bool exact = false;
};

/// Move leaving the opponent the fewest legal replies, smallest square on ties.
/// Not optimal play.
inline std::optional<Move> heuristic_move(const Board& board) {
  std::optional<Move> best;
  std::size_t best_replies = 0;
  Board scratch = board;
  board.for_each_legal_move([&](const Move& m) {
    scratch.apply(m);
    const std::size_t replies = scratch.legal_moves().size();
    scratch.undo();
    if (!best || replies < best_replies) {
      best = m;
      best_replies = replies;
    }
  });
  return best;
}

/// Exact solver within the exhaustive guard, heuristic beyond it. A lost
/// position falls back to the heuristic move.
inline std::optional<EngineChoice> choose_engine_move(const Board& board) {
  if (!board.has_legal_move()) return std::nullopt;
  if (board.size() <= kExhaustiveMaxN) {
    const SolveResult solved = solve_position(board);
    if (solved.best_move) return EngineChoice{*solved.best_move, true};
    return EngineChoice{*heuristic_move(board), true};
  }
  return EngineChoice{*heuristic_move(board), false};
}

}  // namespace modq

#endif
