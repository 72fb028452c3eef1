#ifndef MODQ_TEXT_FORMAT_HPP
#define MODQ_TEXT_FORMAT_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "modq/board.hpp"

namespace modq {

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

inline int parse_int(std::string_view text, std::string_view what) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "missing value for " + std::string(what));
  int value = 0;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  if (i == text.size()) throw Error(ErrorCode::ParseError, "bad integer for " + std::string(what));
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "' for " + std::string(what));
    value = value * 10 + (text[i] - '0');
    if (value > 1'000'000) throw Error(ErrorCode::ParseError, "integer out of range for " + std::string(what));
  }
  return negative ? -value : value;
}

}  // namespace detail

struct Header {
  int n = 0;
  GameVariant variant;
};

/// "n=<int> variant=<kind> k=<modulus>", followed by " seed=<r>,<c>" for the
/// variants that start from a seed square.
inline std::string format_header(int n, const GameVariant& v) {
  std::string out = "n=" + std::to_string(n) + " variant=" + to_string(v.kind) + " k=" + std::to_string(v.modulus);
  if (v.seed) out += " seed=" + std::to_string(v.seed->row) + "," + std::to_string(v.seed->col);
  return out;
}

inline Header parse_header(std::string_view line) {
  Header h;
  std::istringstream in{std::string(line)};
  std::string token;
  bool have_n = false, have_variant = false, have_k = false;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "malformed header token '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n" && !have_n) {
      h.n = detail::parse_int(value, "n");
      have_n = true;
    } else if (key == "variant" && !have_variant) {
      try {
        h.variant.kind = parse_variant_kind(value);
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
      }
      have_variant = true;
    } else if (key == "k" && !have_k) {
      h.variant.modulus = detail::parse_int(value, "k");
      have_k = true;
    } else if (key == "seed" && !h.variant.seed) {
      const auto comma = value.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "seed must be <row>,<col>");
      h.variant.seed = Square{detail::parse_int(value.substr(0, comma), "seed row"),
                              detail::parse_int(value.substr(comma + 1), "seed col")};
    } else {
      throw Error(ErrorCode::ParseError, "unexpected header token '" + token + "'");
    }
  }
  if (!have_n || !have_variant || !have_k) throw Error(ErrorCode::ParseError, "header needs n=, variant= and k=");
  if (h.n < 1) throw Error(ErrorCode::ParseError, "n must be >= 1");
  try {
    h.variant.validate(h.n);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return h;
}

/// Grid character for a square: 'Q' queen, '.' open empty, 'x' closed empty.
/// In the complementary game no empty square is ever playable; there '.' marks an
/// empty square whose attacker count is 0 mod k.
inline char square_char(const Board& board, Square s) {
  if (board.occupied(s)) return 'Q';
  if (board.variant().kind == VariantKind::Complementary)
    return board.attackers(s) % board.variant().modulus == 0 ? '.' : 'x';
  return board.is_open(s) ? '.' : 'x';
}

inline std::string format_board(const Board& board) {
  std::string out = format_header(board.size(), board.variant()) + "\n";
  for (int r = 1; r <= board.size(); ++r) {
    for (int c = 1; c <= board.size(); ++c) out.push_back(square_char(board, {r, c}));
    out.push_back('\n');
  }
  return out;
}

/// Parses the board text format. Open/closed markers must agree with the
/// attack counts implied by the queens.
inline Board parse_board(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty board text");
  const Header h = parse_header(lines[0]);
  if (lines.size() < static_cast<std::size_t>(h.n) + 1)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(h.n) + " grid lines");
  for (std::size_t i = h.n + 1; i < lines.size(); ++i) {
    if (!lines[i].empty()) throw Error(ErrorCode::ParseError, "trailing content after grid");
  }
  std::vector<std::uint8_t> occupancy(static_cast<std::size_t>(h.n) * h.n, 0);
  for (int r = 0; r < h.n; ++r) {
    const std::string& row = lines[r + 1];
    if (row.size() != static_cast<std::size_t>(h.n))
      throw Error(ErrorCode::ParseError, "grid line " + std::to_string(r + 1) + " must have " + std::to_string(h.n) + " characters");
    for (int c = 0; c < h.n; ++c) {
      const char ch = row[c];
      if (ch != 'Q' && ch != '.' && ch != 'x')
        throw Error(ErrorCode::ParseError, std::string("bad grid character '") + ch + "'");
      occupancy[r * h.n + c] = ch == 'Q' ? 1 : 0;
    }
  }
  Board board = Board::from_occupancy(h.n, h.variant, occupancy);
  for (int r = 1; r <= h.n; ++r) {
    for (int c = 1; c <= h.n; ++c) {
      if (square_char(board, {r, c}) != lines[r][c - 1])
        throw Error(ErrorCode::ParseError, "open/closed marker at " + Square{r, c}.to_string() + " disagrees with the queens");
    }
  }
  return board;
}

}  // namespace modq

#endif
