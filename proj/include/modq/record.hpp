#ifndef MODQ_RECORD_HPP
#define MODQ_RECORD_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modq/board.hpp"
#include "modq/text_format.hpp"

namespace modq {

/// A move sequence played from the variant's initial position.
struct GameRecord {
  int n = 1;
  GameVariant variant;
  std::vector<Move> moves;

  bool operator==(const GameRecord&) const = default;
};

struct ReplayReport {
  bool legal = false;
  BoardClass final_class = BoardClass::Unlocked;
  int queens = 0;
  /// Zero-based index of the first illegal move.
  std::optional<std::size_t> first_illegal;
  std::string reason;
};

/// Replays the record through Board. Illegality is reported, not thrown.
inline ReplayReport verify_sequence(const GameRecord& record) {
  ReplayReport report;
  Board board(record.n, record.variant);
  for (std::size_t i = 0; i < record.moves.size(); ++i) {
    if (auto why = board.violation(record.moves[i])) {
      report.first_illegal = i;
      report.reason = *why;
      report.final_class = board.classify();
      report.queens = board.queen_count();
      return report;
    }
    board.apply(record.moves[i]);
  }
  report.legal = true;
  report.final_class = board.classify();
  report.queens = board.queen_count();
  return report;
}

/// Board reached by the record; throws IllegalMove on the first bad move.
inline Board replay(const GameRecord& record) {
  Board board(record.n, record.variant);
  for (const Move& m : record.moves) board.apply(m);
  return board;
}

inline GameRecord record_of(const Board& board) { return {board.size(), board.variant(), board.history()}; }

inline std::string format_record(const GameRecord& record) {
  std::string out = format_header(record.n, record.variant) + "\n";
  for (const Move& m : record.moves) out += m.to_string() + "\n";
  return out;
}

inline GameRecord parse_record(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty record text");
  const Header h = parse_header(lines[0]);
  GameRecord record{h.n, h.variant, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string action, row, col, extra;
    if (!(in >> action >> row >> col) || (in >> extra))
      throw Error(ErrorCode::ParseError, "record line " + std::to_string(i + 1) + " must be 'P r c' or 'R r c'");
    Move m;
    if (action == "P") {
      m.action = Action::Place;
    } else if (action == "R") {
      m.action = Action::Remove;
    } else {
      throw Error(ErrorCode::ParseError, "unknown action '" + action + "' on line " + std::to_string(i + 1));
    }
    m.at = {detail::parse_int(row, "row"), detail::parse_int(col, "col")};
    record.moves.push_back(m);
  }
  return record;
}

}  // namespace modq

#endif
