#ifndef MODQ_BOARD_HPP
#define MODQ_BOARD_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modq/error.hpp"
#include "modq/square.hpp"
#include "modq/variant.hpp"

namespace modq {

enum class Action { Place, Remove };

struct Move {
  Action action = Action::Place;
  Square at;

  auto operator<=>(const Move&) const = default;

  static Move place(int row, int col) { return {Action::Place, {row, col}}; }
  static Move remove(int row, int col) { return {Action::Remove, {row, col}}; }

  std::string to_string() const {
    return std::string(action == Action::Place ? "P " : "R ") + std::to_string(at.row) + " " +
           std::to_string(at.col);
  }
};

enum class BoardClass { Complete, Locked, Unlocked };

inline const char* to_string(BoardClass c) {
  switch (c) {
    case BoardClass::Complete: return "Complete";
    case BoardClass::Locked: return "Locked";
    case BoardClass::Unlocked: return "Unlocked";
  }
  return "?";
}

/// Row-major occupancy bit-string packed most-significant-bit first, so that
/// comparing the word vectors compares the bit-strings lexicographically.
struct BitKey {
  std::vector<std::uint64_t> words;

  auto operator<=>(const BitKey&) const = default;

  static BitKey from_bits(const std::vector<std::uint8_t>& bits) {
    BitKey key;
    key.words.assign((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) key.words[i / 64] |= std::uint64_t{1} << (63 - i % 64);
    }
    return key;
  }

  bool test(std::size_t i) const { return (words[i / 64] >> (63 - i % 64)) & 1U; }

  std::string to_bit_string(std::size_t length) const {
    std::string out(length, '0');
    for (std::size_t i = 0; i < length; ++i) out[i] = test(i) ? '1' : '0';
    return out;
  }
};

struct BitKeyHash {
  std::size_t operator()(const BitKey& key) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t w : key.words) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using CanonicalKey = BitKey;

struct ParityCell {
  bool occupied = false;
  int residue = 0;
};

/// Queens on an n x n board together with per-line counters.
///
/// Attacks never block: a queen attacks every square on her row, column and both
/// diagonals. Counters are kept for every row, column, sum diagonal and difference
/// diagonal, so attackers() is O(1) and a move updates four counters.
class Board {
 public:
  Board(int n, GameVariant variant = GameVariant::standard()) : n_(n), variant_(std::move(variant)) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "board size must be >= 1, got " + std::to_string(n));
    variant_.validate(n);
    occupancy_.assign(static_cast<std::size_t>(n) * n, 0);
    rows_.assign(n, 0);
    cols_.assign(n, 0);
    sums_.assign(2 * n - 1, 0);
    diffs_.assign(2 * n - 1, 0);
    switch (variant_.kind) {
      case VariantKind::Standard: break;
      case VariantKind::AlternateUniverse: set(*variant_.seed, true); break;
      case VariantKind::Complementary:
        for (int i = 0; i < n * n; ++i) set(Square::from_index(i, n), true);
        set(*variant_.seed, false);
        break;
    }
  }

  /// A position with the given occupancy and no history.
  static Board from_occupancy(int n, GameVariant variant, const std::vector<std::uint8_t>& occupancy) {
    variant.validate(n);
    Board board(n, GameVariant::standard(variant.modulus));
    if (occupancy.size() != static_cast<std::size_t>(n) * n)
      throw Error(ErrorCode::InvalidArgument, "occupancy size does not match board size");
    board.variant_ = std::move(variant);
    for (int i = 0; i < n * n; ++i) {
      if (occupancy[i]) board.set(Square::from_index(i, n), true);
    }
    return board;
  }

  int size() const { return n_; }
  int square_count() const { return n_ * n_; }
  const GameVariant& variant() const { return variant_; }
  const std::vector<Move>& history() const { return history_; }
  const std::vector<std::uint8_t>& occupancy() const { return occupancy_; }
  int queen_count() const { return queens_; }

  bool contains(Square s) const { return s.on_board(n_); }

  bool occupied(Square s) const {
    check_square(s);
    return occupancy_[s.index(n_)] != 0;
  }

  /// Queens sharing a line with s, not counting a queen standing on s.
  int attackers(Square s) const {
    check_square(s);
    const int self = occupancy_[s.index(n_)] ? 4 : 0;
    return rows_[s.row - 1] + cols_[s.col - 1] + sums_[s.row + s.col - 2] + diffs_[s.row - s.col + n_ - 1] - self;
  }

  std::vector<ParityCell> parity_map() const {
    std::vector<ParityCell> cells(occupancy_.size());
    for (int i = 0; i < square_count(); ++i) {
      const Square s = Square::from_index(i, n_);
      cells[i] = {occupancy_[i] != 0, attackers(s) % variant_.modulus};
    }
    return cells;
  }

  /// Empty square is open for placement under this variant's parity rule.
  bool is_open(Square s) const {
    if (occupied(s)) return false;
    const int residue = attackers(s) % variant_.modulus;
    return variant_.kind == VariantKind::AlternateUniverse ? residue == 1 : residue == 0;
  }

  /// Occupied square whose queen may be removed in the complementary game.
  bool is_removable(Square s) const {
    return variant_.kind == VariantKind::Complementary && occupied(s) && attackers(s) % variant_.modulus == 0;
  }

  /// Legal moves in row-major order.
  std::vector<Move> legal_moves() const {
    std::vector<Move> moves;
    for_each_legal_move([&](const Move& m) { moves.push_back(m); });
    return moves;
  }

  template <typename Fn>
  void for_each_legal_move(Fn&& fn) const {
    const bool removing = variant_.kind == VariantKind::Complementary;
    for (int i = 0; i < square_count(); ++i) {
      const Square s = Square::from_index(i, n_);
      if (removing ? is_removable(s) : is_open(s)) fn(Move{removing ? Action::Remove : Action::Place, s});
    }
  }

  bool has_legal_move() const {
    bool any = false;
    for (int i = 0; i < square_count() && !any; ++i) {
      const Square s = Square::from_index(i, n_);
      any = variant_.kind == VariantKind::Complementary ? is_removable(s) : is_open(s);
    }
    return any;
  }

  /// Reason the move is illegal, or nullopt when it is legal.
  std::optional<std::string> violation(const Move& m) const {
    if (!contains(m.at)) return "square " + m.at.to_string() + " is off the " + std::to_string(n_) + "x" + std::to_string(n_) + " board";
    const bool removing = variant_.kind == VariantKind::Complementary;
    if (removing && m.action == Action::Place) return std::string("the complementary game only removes queens");
    if (!removing && m.action == Action::Remove) return std::string(to_string(variant_.kind)) + " play only places queens";
    const int count = attackers(m.at);
    if (m.action == Action::Place) {
      if (occupied(m.at)) return "square " + m.at.to_string() + " is occupied";
      if (!is_open(m.at))
        return "square " + m.at.to_string() + " is closed: attacked by " + std::to_string(count) + " queen" +
               (count == 1 ? "" : "s");
    } else {
      if (!occupied(m.at)) return "square " + m.at.to_string() + " holds no queen";
      if (!is_removable(m.at))
        return "queen at " + m.at.to_string() + " cannot be removed: attacked by " + std::to_string(count) +
               " other queen" + (count == 1 ? "" : "s");
    }
    return std::nullopt;
  }

  bool is_legal(const Move& m) const { return !violation(m).has_value(); }

  void apply(const Move& m) {
    if (auto why = violation(m)) throw Error(ErrorCode::IllegalMove, "illegal move " + m.to_string() + ": " + *why);
    set(m.at, m.action == Action::Place);
    history_.push_back(m);
  }

  void undo() {
    if (history_.empty()) throw Error(ErrorCode::EmptyHistory, "no move to undo");
    const Move m = history_.back();
    history_.pop_back();
    set(m.at, m.action != Action::Place);
  }

  /// Terminal-full is all squares occupied, or all squares empty in the complementary game.
  bool is_complete() const {
    return variant_.kind == VariantKind::Complementary ? queens_ == 0 : queens_ == square_count();
  }

  BoardClass classify() const {
    if (is_complete()) return BoardClass::Complete;
    return has_legal_move() ? BoardClass::Unlocked : BoardClass::Locked;
  }

  bool is_terminal() const { return classify() != BoardClass::Unlocked; }

  Board transformed(Symmetry g) const {
    std::vector<std::uint8_t> image(occupancy_.size(), 0);
    for (int i = 0; i < square_count(); ++i) {
      if (occupancy_[i]) image[apply_symmetry(g, i)] = 1;
    }
    GameVariant v = variant_;
    if (v.seed) v.seed = modq::apply(g, *v.seed, n_);
    Board out = from_occupancy(n_, v, image);
    for (const Move& m : history_) out.history_.push_back({m.action, modq::apply(g, m.at, n_)});
    return out;
  }

  BitKey key() const { return BitKey::from_bits(occupancy_); }

  /// Least row-major occupancy bit-string over the eight symmetric images.
  CanonicalKey canonical_key() const {
    std::optional<BitKey> best;
    std::vector<std::uint8_t> image(occupancy_.size());
    for (Symmetry g : kAllSymmetries) {
      for (int i = 0; i < square_count(); ++i) image[apply_symmetry(g, i)] = occupancy_[i];
      BitKey k = BitKey::from_bits(image);
      if (!best || k < *best) best = std::move(k);
    }
    return *best;
  }

  /// Field-for-field equality, including counters and history.
  bool operator==(const Board& other) const = default;

  bool same_position(const Board& other) const { return n_ == other.n_ && occupancy_ == other.occupancy_; }

 private:
  void check_square(Square s) const {
    if (!contains(s))
      throw Error(ErrorCode::InvalidArgument,
                  "square " + s.to_string() + " is off the " + std::to_string(n_) + "x" + std::to_string(n_) + " board");
  }

  int apply_symmetry(Symmetry g, int index) const { return modq::apply(g, Square::from_index(index, n_), n_).index(n_); }

  void set(Square s, bool queen) {
    auto& cell = occupancy_[s.index(n_)];
    if ((cell != 0) == queen) return;
    cell = queen ? 1 : 0;
    const int delta = queen ? 1 : -1;
    queens_ += delta;
    rows_[s.row - 1] += delta;
    cols_[s.col - 1] += delta;
    sums_[s.row + s.col - 2] += delta;
    diffs_[s.row - s.col + n_ - 1] += delta;
  }

  int n_;
  GameVariant variant_;
  std::vector<std::uint8_t> occupancy_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<int> sums_;
  std::vector<int> diffs_;
  int queens_ = 0;
  std::vector<Move> history_;
};

}  // namespace modq

#endif
