#ifndef MODQ_SQUARE_HPP
#define MODQ_SQUARE_HPP

#include <array>
#include <compare>
#include <string>

namespace modq {

/// 1-based (row, column) coordinate. Row 1 is the top rank, column 1 the left file.
struct Square {
  int row = 1;
  int col = 1;

  constexpr auto operator<=>(const Square&) const = default;

  constexpr bool on_board(int n) const { return row >= 1 && row <= n && col >= 1 && col <= n; }

  /// Index of the sum diagonal, in [2, 2n].
  constexpr int sum_diagonal() const { return row + col; }
  /// Index of the difference diagonal, in [-(n-1), n-1].
  constexpr int diff_diagonal() const { return row - col; }

  constexpr int index(int n) const { return (row - 1) * n + (col - 1); }
  static constexpr Square from_index(int index, int n) { return {index / n + 1, index % n + 1}; }

  std::string to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

/// True when the two squares share a row, column or diagonal. A square does not
/// share a line with itself.
constexpr bool same_line(Square a, Square b) {
  if (a == b) return false;
  return a.row == b.row || a.col == b.col || a.sum_diagonal() == b.sum_diagonal() ||
         a.diff_diagonal() == b.diff_diagonal();
}

/// The eight symmetries of the square.
enum class Symmetry {
  Identity,
  Rotate90,   // clockwise
  Rotate180,
  Rotate270,
  FlipRows,     // top <-> bottom
  FlipColumns,  // left <-> right
  Transpose,    // main difference diagonal
  AntiTranspose,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::Identity,  Symmetry::Rotate90,    Symmetry::Rotate180, Symmetry::Rotate270,
    Symmetry::FlipRows,  Symmetry::FlipColumns, Symmetry::Transpose, Symmetry::AntiTranspose,
};

constexpr Square apply(Symmetry g, Square s, int n) {
  const int r = s.row;
  const int c = s.col;
  switch (g) {
    case Symmetry::Identity: return {r, c};
    case Symmetry::Rotate90: return {c, n + 1 - r};
    case Symmetry::Rotate180: return {n + 1 - r, n + 1 - c};
    case Symmetry::Rotate270: return {n + 1 - c, r};
    case Symmetry::FlipRows: return {n + 1 - r, c};
    case Symmetry::FlipColumns: return {r, n + 1 - c};
    case Symmetry::Transpose: return {c, r};
    case Symmetry::AntiTranspose: return {n + 1 - c, n + 1 - r};
  }
  return s;
}

inline const char* to_string(Symmetry g) {
  switch (g) {
    case Symmetry::Identity: return "identity";
    case Symmetry::Rotate90: return "rot90";
    case Symmetry::Rotate180: return "rot180";
    case Symmetry::Rotate270: return "rot270";
    case Symmetry::FlipRows: return "flip-rows";
    case Symmetry::FlipColumns: return "flip-columns";
    case Symmetry::Transpose: return "transpose";
    case Symmetry::AntiTranspose: return "anti-transpose";
  }
  return "?";
}

}  // namespace modq

#endif
