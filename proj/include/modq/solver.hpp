#ifndef MODQ_SOLVER_HPP
#define MODQ_SOLVER_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "modq/board.hpp"
#include "modq/record.hpp"

namespace modq {

/// Exhaustive operations refuse boards above this size unless overridden.
inline constexpr int kExhaustiveMaxN = 4;

inline void check_budget(int n, bool allow_large, const char* operation) {
  if (n > kExhaustiveMaxN && !allow_large)
    throw Error(ErrorCode::BudgetExceeded, std::string(operation) + " is exhaustive; n=" + std::to_string(n) +
                                               " exceeds the n<=" + std::to_string(kExhaustiveMaxN) + " guard");
}

// ---------------------------------------------------------------------------
// Game tree enumeration

struct EnumerateOptions {
  bool use_symmetry = true;
  std::optional<int> depth_limit;
  bool allow_large = false;
};

struct EnumerationStats {
  /// Maximal move sequences (games), counted as ordered sequences.
  std::uint64_t leaf_count = 0;
  int min_depth = 0;
  int max_depth = 0;
  /// leaves_by_depth[d] = games of exactly d moves.
  std::vector<std::uint64_t> leaves_by_depth;
  /// Sequences cut off at the depth limit with moves still available.
  std::uint64_t truncated = 0;
  /// Distinct terminal positions; only filled without symmetry reduction.
  std::optional<std::uint64_t> terminal_positions;
  /// Distinct terminal positions up to symmetry.
  std::uint64_t terminal_orbits = 0;
  std::uint64_t positions_visited = 0;
};

namespace detail {

/// Counts games from each position by dynamic programming over positions. The
/// number of continuations depends only on occupancy, and on the symmetry class
/// of the occupancy, so either key is a sound memo.
class GameCounter {
 public:
  GameCounter(const Board& root, const EnumerateOptions& options) : board_(root), options_(options) {}

  EnumerationStats run() {
    const Entry& root = visit(0);
    EnumerationStats stats;
    stats.leaves_by_depth = root.hist;
    stats.truncated = root.truncated;
    stats.positions_visited = memo_.size();
    bool first = true;
    for (std::size_t d = 0; d < root.hist.size(); ++d) {
      if (!root.hist[d]) continue;
      stats.leaf_count += root.hist[d];
      if (first) stats.min_depth = static_cast<int>(d);
      stats.max_depth = static_cast<int>(d);
      first = false;
    }
    if (!options_.use_symmetry) stats.terminal_positions = terminals_.size();
    stats.terminal_orbits = terminal_orbits_.size();
    return stats;
  }

 private:
  struct Entry {
    std::vector<std::uint64_t> hist;  // hist[d]: games ending d moves after this position
    std::uint64_t truncated = 0;
  };

  const Entry& visit(int depth) {
    BitKey key = options_.use_symmetry ? board_.canonical_key() : board_.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Entry entry;
    const auto moves = board_.legal_moves();
    if (moves.empty()) {
      entry.hist = {1};
      terminal_orbits_.insert(board_.canonical_key());
      if (!options_.use_symmetry) terminals_.insert(key);
    } else if (options_.depth_limit && depth >= *options_.depth_limit) {
      entry.truncated = 1;
    } else {
      for (const Move& m : moves) {
        board_.apply(m);
        const Entry& child = visit(depth + 1);
        board_.undo();
        if (entry.hist.size() < child.hist.size() + 1) entry.hist.resize(child.hist.size() + 1, 0);
        for (std::size_t d = 0; d < child.hist.size(); ++d) entry.hist[d + 1] += child.hist[d];
        entry.truncated += child.truncated;
      }
    }
    return memo_.emplace(std::move(key), std::move(entry)).first->second;
  }

  Board board_;
  EnumerateOptions options_;
  std::unordered_map<BitKey, Entry, BitKeyHash> memo_;
  std::unordered_set<BitKey, BitKeyHash> terminals_;
  std::unordered_set<BitKey, BitKeyHash> terminal_orbits_;
};

}  // namespace detail

inline EnumerationStats enumerate_games(int n, const GameVariant& variant, const EnumerateOptions& options = {}) {
  if (!options.depth_limit) check_budget(n, options.allow_large, "enumerate_games");
  if (options.depth_limit && *options.depth_limit < 0) throw Error(ErrorCode::InvalidArgument, "depth limit must be >= 0");
  return detail::GameCounter(Board(n, variant), options).run();
}

// ---------------------------------------------------------------------------
// Game graph

struct GraphNode {
  CanonicalKey key;
  /// Occupancy of the canonical image; edges are labelled by moves on this board.
  std::vector<std::uint8_t> representative;
  int queens = 0;
  BoardClass cls = BoardClass::Unlocked;
};

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Move label;
};

/// Positions merged by symmetry. Node 0 is the root.
struct GameGraph {
  int n = 1;
  GameVariant variant;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::size_t root = 0;

  std::vector<std::size_t> children(std::size_t node) const {
    std::vector<std::size_t> out;
    for (const GraphEdge& e : edges) {
      if (e.from == node) out.push_back(e.to);
    }
    return out;
  }
};

namespace detail {

inline std::vector<std::uint8_t> key_bits(const BitKey& key, int squares) {
  std::vector<std::uint8_t> bits(squares);
  for (int i = 0; i < squares; ++i) bits[i] = key.test(i) ? 1 : 0;
  return bits;
}

}  // namespace detail

/// Breadth-first closure of the root over canonical positions. One edge per
/// (source, target) orbit pair, labelled by the first move reaching it.
inline GameGraph build_game_graph(int n, const GameVariant& variant, bool allow_large = false) {
  check_budget(n, allow_large, "build_game_graph");
  GameGraph graph{n, variant, {}, {}, 0};
  std::unordered_map<CanonicalKey, std::size_t, BitKeyHash> index;

  auto add_node = [&](const Board& board) {
    CanonicalKey key = board.canonical_key();
    if (auto it = index.find(key); it != index.end()) return std::pair{it->second, false};
    const std::size_t id = graph.nodes.size();
    graph.nodes.push_back({key, detail::key_bits(key, n * n), board.queen_count(), board.classify()});
    index.emplace(std::move(key), id);
    return std::pair{id, true};
  };

  add_node(Board(n, variant));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const Board board = Board::from_occupancy(n, variant, graph.nodes[id].representative);
    std::set<std::size_t> targets;
    board.for_each_legal_move([&](const Move& m) {
      Board child = board;
      child.apply(m);
      auto [to, fresh] = add_node(child);
      if (fresh) queue.push_back(to);
      if (targets.insert(to).second) graph.edges.push_back({id, to, m});
    });
  }
  return graph;
}

// ---------------------------------------------------------------------------
// Normal-play solving: the player with no move loses.

enum class GameValue { Win, Loss };

inline const char* to_string(GameValue v) { return v == GameValue::Win ? "Win" : "Loss"; }

enum class MemoMode { None, Raw, Canonical };

struct SolveOptions {
  MemoMode memo = MemoMode::Canonical;
  bool allow_large = false;
};

struct SolveResult {
  GameValue value = GameValue::Loss;
  /// Smallest (row, col) winning move; present iff value is Win.
  std::optional<Move> best_move;
  std::uint64_t node_count = 0;
};

namespace detail {

class Solver {
 public:
  Solver(const Board& board, MemoMode memo) : board_(board), memo_mode_(memo) {}

  SolveResult solve_root() {
    SolveResult result;
    ++nodes_;
    const auto moves = board_.legal_moves();
    for (const Move& m : moves) {
      board_.apply(m);
      const GameValue child = value();
      board_.undo();
      if (child == GameValue::Loss) {
        result.value = GameValue::Win;
        result.best_move = m;
        break;
      }
    }
    result.node_count = nodes_;
    return result;
  }

 private:
  GameValue value() {
    std::optional<BitKey> key;
    if (memo_mode_ != MemoMode::None) {
      key = memo_mode_ == MemoMode::Canonical ? board_.canonical_key() : board_.key();
      if (auto it = memo_.find(*key); it != memo_.end()) return it->second;
    }
    ++nodes_;
    GameValue v = GameValue::Loss;
    const auto moves = board_.legal_moves();
    for (const Move& m : moves) {
      board_.apply(m);
      const GameValue child = value();
      board_.undo();
      if (child == GameValue::Loss) {
        v = GameValue::Win;
        break;
      }
    }
    if (key) memo_.emplace(std::move(*key), v);
    return v;
  }

  Board board_;
  MemoMode memo_mode_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<BitKey, GameValue, BitKeyHash> memo_;
};

}  // namespace detail

/// Value of the position for the player to move.
inline SolveResult solve_position(const Board& board, const SolveOptions& options = {}) {
  check_budget(board.size(), options.allow_large, "solve_game");
  return detail::Solver(board, options.memo).solve_root();
}

inline SolveResult solve_game(int n, const GameVariant& variant, const SolveOptions& options = {}) {
  check_budget(n, options.allow_large, "solve_game");
  return solve_position(Board(n, variant), options);
}

// ---------------------------------------------------------------------------
// Extremal locked boards and state counting

struct ExtremalResult {
  int count = 0;
  GameRecord witness;
};

namespace detail {

/// Visits every reachable symmetry class once, in depth-first order; the board
/// handed to the visitor carries the legal history that reached it.
template <typename Visit>
void for_each_reachable(const Board& root, Visit&& visit, std::optional<int> depth_limit = std::nullopt) {
  std::unordered_set<CanonicalKey, BitKeyHash> seen;
  Board board = root;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (!seen.insert(board.canonical_key()).second) return;
    const auto moves = board.legal_moves();
    visit(board, moves.empty());
    if (depth_limit && depth >= *depth_limit) return;
    for (const Move& m : moves) {
      board.apply(m);
      self(self, depth + 1);
      board.undo();
    }
  };
  dfs(dfs, 0);
}

}  // namespace detail

/// Largest queen count over reachable Locked boards, or nullopt when none exist.
inline std::optional<ExtremalResult> max_locked_queens(int n, const GameVariant& variant = GameVariant::standard(),
                                                       bool allow_large = false) {
  check_budget(n, allow_large, "max_locked_queens");
  std::optional<ExtremalResult> best;
  detail::for_each_reachable(Board(n, variant), [&](const Board& b, bool terminal) {
    if (!terminal || b.is_complete()) return;
    if (!best || b.queen_count() > best->count) best = ExtremalResult{b.queen_count(), record_of(b)};
  });
  return best;
}

/// Smallest queen count over reachable Locked boards, or nullopt when none exist.
/// Placement games deepen the move limit one ply at a time, so the first Locked
/// board found is minimal; the complementary game scans every position.
inline std::optional<ExtremalResult> min_locked_queens(int n, const GameVariant& variant = GameVariant::standard(),
                                                       bool allow_large = false) {
  check_budget(n, allow_large, "min_locked_queens");
  std::optional<ExtremalResult> best;
  auto consider = [&](const Board& b, bool terminal) {
    if (!terminal || b.is_complete()) return;
    if (!best || b.queen_count() < best->count) best = ExtremalResult{b.queen_count(), record_of(b)};
  };
  const Board root(n, variant);
  if (variant.kind == VariantKind::Complementary) {
    detail::for_each_reachable(root, consider);
    return best;
  }
  for (int limit = 0; limit <= n * n && !best; ++limit) {
    detail::for_each_reachable(
        root,
        [&](const Board& b, bool terminal) {
          if (static_cast<int>(b.history().size()) == limit) consider(b, terminal);
        },
        limit);
  }
  return best;
}

struct StateCount {
  std::uint64_t raw = 0;
  std::uint64_t canonical = 0;
};

/// Distinct occupancies reachable by legal play, raw and up to symmetry.
inline StateCount count_reachable_states(int n, const GameVariant& variant = GameVariant::standard(),
                                         bool allow_large = false) {
  check_budget(n, allow_large, "count_reachable_states");
  std::unordered_set<BitKey, BitKeyHash> raw;
  std::unordered_set<CanonicalKey, BitKeyHash> canonical;
  Board board(n, variant);
  auto dfs = [&](auto&& self) -> void {
    if (!raw.insert(board.key()).second) return;
    canonical.insert(board.canonical_key());
    board.for_each_legal_move([&](const Move& m) {
      board.apply(m);
      self(self);
      board.undo();
    });
  };
  dfs(dfs);
  return {raw.size(), canonical.size()};
}

}  // namespace modq

#endif
