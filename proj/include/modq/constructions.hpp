#ifndef MODQ_CONSTRUCTIONS_HPP
#define MODQ_CONSTRUCTIONS_HPP

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <vector>

#include "modq/board.hpp"
#include "modq/record.hpp"

namespace modq {

namespace detail {

/// First eight placements on the 3x3 corner, in the order that fills it legally.
inline constexpr std::array<Square, 8> kFrameSeed = {{
    {1, 1}, {3, 2}, {2, 2}, {2, 3}, {2, 1}, {3, 1}, {1, 3}, {1, 2},
}};

inline std::vector<Move> translate(const std::vector<Move>& moves, int offset) {
  std::vector<Move> out;
  out.reserve(moves.size());
  for (const Move& m : moves) out.push_back({m.action, {m.at.row + offset, m.at.col + offset}});
  return out;
}

/// Depth-first search for an order in which every target square can be filled
/// legally, starting from `board`. Subsets already shown to be dead ends are
/// remembered, since the position depends only on which targets are filled.
class OrderSearch {
 public:
  OrderSearch(Board board, std::vector<Square> targets, std::size_t node_budget)
      : board_(std::move(board)), targets_(std::move(targets)), budget_(node_budget) {}

  std::optional<std::vector<Move>> run() {
    std::vector<std::uint8_t> filled(targets_.size(), 0);
    std::vector<Move> path;
    if (dfs(filled, path)) return path;
    return std::nullopt;
  }

 private:
  bool dfs(std::vector<std::uint8_t>& filled, std::vector<Move>& path) {
    if (path.size() == targets_.size()) return true;
    if (++nodes_ > budget_) return false;
    BitKey key = BitKey::from_bits(filled);
    if (dead_.count(key)) return false;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (filled[i]) continue;
      const Move m = Move{Action::Place, targets_[i]};
      if (!board_.is_legal(m)) continue;
      board_.apply(m);
      filled[i] = 1;
      path.push_back(m);
      if (dfs(filled, path)) return true;
      path.pop_back();
      filled[i] = 0;
      board_.undo();
    }
    dead_.insert(std::move(key));
    return false;
  }

  Board board_;
  std::vector<Square> targets_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_set<BitKey, BitKeyHash> dead_;
};

template <typename Fn>
std::vector<Move> cached(std::map<int, std::vector<Move>>& cache, std::mutex& mu, int n, Fn&& build) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Move> moves = build();
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(moves)).first->second;
}

inline constexpr std::size_t kOrderSearchBudget = 50'000'000;

}  // namespace detail

/// Placements filling rows 1-2 and columns 1-2 of an empty n x n board, leaving
/// every empty square with an even attacker count. Odd n follows the seed and the
/// four-step pattern exactly; even n finishes the last column and row pair by a
/// small order search.
inline GameRecord frame_fill_sequence(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "frame fill needs n >= 3, got " + std::to_string(n));
  static std::map<int, std::vector<Move>> cache;
  static std::mutex mu;
  auto moves = detail::cached(cache, mu, n, [n] {
    std::vector<Move> out;
    for (Square s : detail::kFrameSeed) out.push_back({Action::Place, s});
    for (int k = 1; k <= (n - 3) / 2; ++k) {
      const int a = 2 * k + 2;
      const int b = 2 * k + 3;
      for (Square s : {Square{2, a}, Square{1, a}, Square{a, 1}, Square{a, 2}, Square{1, b}, Square{2, b},
                       Square{b, 2}, Square{b, 1}}) {
        out.push_back({Action::Place, s});
      }
    }
    if (n % 2 == 0) {
      Board board(n);
      for (const Move& m : out) board.apply(m);
      detail::OrderSearch search(board, {{1, n}, {2, n}, {n, 1}, {n, 2}}, detail::kOrderSearchBudget);
      auto tail = search.run();
      if (!tail) throw Error(ErrorCode::SearchFailed, "no legal order completes the frame for n=" + std::to_string(n));
      out.insert(out.end(), tail->begin(), tail->end());
    }
    return out;
  });
  return {n, GameVariant::standard(), std::move(moves)};
}

/// n^2 placements ending on a complete board, for odd n. Each frame leaves the
/// lower-right (n-2) x (n-2) block playing like an empty board, so frames are
/// stacked at offsets 0, 2, 4, ... and the last cell takes the final queen.
inline GameRecord odd_complete_sequence(int n) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "odd complete construction needs odd n >= 1, got " + std::to_string(n));
  GameRecord record{n, GameVariant::standard(), {}};
  for (int offset = 0; n - offset >= 3; offset += 2) {
    const auto frame = detail::translate(frame_fill_sequence(n - offset).moves, offset);
    record.moves.insert(record.moves.end(), frame.begin(), frame.end());
  }
  record.moves.push_back(Move::place(n, n));
  return record;
}

/// 2n-1 placements ending locked with queens on row 1 and column 1, for odd n >= 3.
/// Stage i fills (i,1), (1,i+1), (i+1,1), (1,i); the corner (1,1) goes last.
inline GameRecord odd_locked_sequence(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "odd locked construction needs odd n >= 3, got " + std::to_string(n));
  GameRecord record{n, GameVariant::standard(), {}};
  for (int i = 2; i < n; i += 2) {
    for (Square s : {Square{i, 1}, Square{1, i + 1}, Square{i + 1, 1}, Square{1, i}}) record.moves.push_back({Action::Place, s});
  }
  record.moves.push_back(Move::place(1, 1));
  return record;
}

/// Target occupancy of the even locked board: row 1 and column 1 without their
/// end squares, plus the far corner.
inline std::vector<Square> even_locked_targets(int n) {
  std::vector<Square> targets;
  for (int i = 2; i <= n - 1; ++i) {
    targets.push_back({1, i});
    targets.push_back({i, 1});
  }
  targets.push_back({n, n});
  return targets;
}

/// 2n-3 placements ending locked on even_locked_targets(n), for even n >= 4. The
/// order is found by depth-first search over the target squares and cached. For
/// n <= 16 the search returns stages i = 2, 4, ..., n-2 of (1,i), (i+1,1), (i,1),
/// (1,i+1), followed by (n,n).
inline GameRecord even_locked_sequence(int n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "even locked construction needs even n >= 4, got " + std::to_string(n));
  static std::map<int, std::vector<Move>> cache;
  static std::mutex mu;
  auto moves = detail::cached(cache, mu, n, [n] {
    detail::OrderSearch search(Board(n), even_locked_targets(n), detail::kOrderSearchBudget);
    auto found = search.run();
    if (!found) throw Error(ErrorCode::SearchFailed, "no legal order reaches the even locked board for n=" + std::to_string(n));
    return *found;
  });
  return {n, GameVariant::standard(), std::move(moves)};
}

namespace detail {

/// Search over positions of the empty n x n board for a Locked board holding
/// `goal` queens. Positions are visited once each.
class LockedSearch {
 public:
  LockedSearch(int n, int goal, std::size_t node_budget) : board_(n), goal_(goal), budget_(node_budget) {}

  std::optional<std::vector<Move>> run() {
    if (dfs()) return board_.history();
    return std::nullopt;
  }

 private:
  bool dfs() {
    if (++nodes_ > budget_) return false;
    if (!seen_.insert(board_.key()).second) return false;
    const auto moves = board_.legal_moves();
    if (moves.empty()) return board_.queen_count() == goal_ && !board_.is_complete();
    for (const Move& m : moves) {
      board_.apply(m);
      if (dfs()) return true;
      board_.undo();
    }
    return false;
  }

  Board board_;
  int goal_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_set<BitKey, BitKeyHash> seen_;
};

}  // namespace detail

/// n^2-2 placements ending locked, for even n >= 4. The 4x4 base is found by
/// exhaustive search; larger boards put a frame on the empty board and recurse
/// into the lower-right (n-2) x (n-2) block.
inline GameRecord even_near_complete_sequence(int n) {
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "even near-complete construction needs even n >= 4, got " + std::to_string(n));
  static std::map<int, std::vector<Move>> cache;
  static std::mutex mu;
  auto moves = detail::cached(cache, mu, n, [n] {
    if (n == 4) {
      detail::LockedSearch search(4, 14, detail::kOrderSearchBudget);
      auto found = search.run();
      if (!found) throw Error(ErrorCode::SearchFailed, "no reachable locked 4x4 board with 14 queens");
      return *found;
    }
    std::vector<Move> out = frame_fill_sequence(n).moves;
    const auto inner = detail::translate(even_near_complete_sequence(n - 2).moves, 2);
    out.insert(out.end(), inner.begin(), inner.end());
    return out;
  });
  return {n, GameVariant::standard(), std::move(moves)};
}

}  // namespace modq

#endif
