#ifndef MODQ_VARIANTS_HPP
#define MODQ_VARIANTS_HPP

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "modq/board.hpp"
#include "modq/record.hpp"
#include "modq/solver.hpp"

namespace modq {

/// Same variant, occupancy complemented, history cleared.
inline Board complement_board(const Board& board) {
  std::vector<std::uint8_t> image(board.occupancy().size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = board.occupancy()[i] ? 0 : 1;
  return Board::from_occupancy(board.size(), board.variant(), image);
}

enum class VariantMap {
  ComplementaryToAlternate,
  AlternateToComplementary,
  ComplementaryToStandard,
  StandardToComplementary,
};

inline const char* to_string(VariantMap map) {
  switch (map) {
    case VariantMap::ComplementaryToAlternate: return "complementary-to-alternate";
    case VariantMap::AlternateToComplementary: return "alternate-to-complementary";
    case VariantMap::ComplementaryToStandard: return "complementary-to-standard";
    case VariantMap::StandardToComplementary: return "standard-to-complementary";
  }
  return "?";
}

inline VariantMap inverse(VariantMap map) {
  switch (map) {
    case VariantMap::ComplementaryToAlternate: return VariantMap::AlternateToComplementary;
    case VariantMap::AlternateToComplementary: return VariantMap::ComplementaryToAlternate;
    case VariantMap::ComplementaryToStandard: return VariantMap::StandardToComplementary;
    case VariantMap::StandardToComplementary: return VariantMap::ComplementaryToStandard;
  }
  return map;
}

/// Even maps pair the complementary and alternate-universe games; odd maps pair
/// the complementary and standard games.
inline bool requires_even(VariantMap map) {
  return map == VariantMap::ComplementaryToAlternate || map == VariantMap::AlternateToComplementary;
}

inline VariantKind source_kind(VariantMap map) {
  switch (map) {
    case VariantMap::ComplementaryToAlternate:
    case VariantMap::ComplementaryToStandard: return VariantKind::Complementary;
    case VariantMap::AlternateToComplementary: return VariantKind::AlternateUniverse;
    case VariantMap::StandardToComplementary: return VariantKind::Standard;
  }
  return VariantKind::Standard;
}

/// Square-for-square translation between paired games. Removals become
/// placements and vice versa. On even boards the complementary seed removal is
/// paired with the alternate universe's pre-placed queen; on odd boards it becomes
/// the first placement of the standard game.
inline GameRecord map_record(const GameRecord& record, VariantMap map) {
  if (requires_even(map) != (record.n % 2 == 0))
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(map)) + " requires " +
                                                (requires_even(map) ? "even" : "odd") + " n, got n=" + std::to_string(record.n));
  if (record.variant.kind != source_kind(map))
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(map)) + " expects a " + to_string(source_kind(map)) +
                                                " record, got " + to_string(record.variant.kind));
  if (const auto report = verify_sequence(record); !report.legal)
    throw Error(ErrorCode::IllegalMove, "source record is illegal at move " + std::to_string(*report.first_illegal + 1) + ": " +
                                            report.reason);

  auto flip = [](const Move& m) { return Move{m.action == Action::Place ? Action::Remove : Action::Place, m.at}; };
  GameRecord out{record.n, {}, {}};
  switch (map) {
    case VariantMap::ComplementaryToAlternate:
      out.variant = GameVariant::alternate(*record.variant.seed);
      for (const Move& m : record.moves) out.moves.push_back(flip(m));
      break;
    case VariantMap::AlternateToComplementary:
      out.variant = GameVariant::complementary(*record.variant.seed);
      for (const Move& m : record.moves) out.moves.push_back(flip(m));
      break;
    case VariantMap::ComplementaryToStandard:
      out.variant = GameVariant::standard();
      out.moves.push_back(Move{Action::Place, *record.variant.seed});
      for (const Move& m : record.moves) out.moves.push_back(flip(m));
      break;
    case VariantMap::StandardToComplementary:
      if (record.moves.empty())
        throw Error(ErrorCode::InvalidArgument, "an empty standard record has no complementary counterpart");
      out.variant = GameVariant::complementary(record.moves.front().at);
      for (std::size_t i = 1; i < record.moves.size(); ++i) out.moves.push_back(flip(record.moves[i]));
      break;
  }
  return out;
}

struct BijectionReport {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_failure;

  void merge(const BijectionReport& other) {
    checked += other.checked;
    failures += other.failures;
    if (!first_failure) first_failure = other.first_failure;
  }
};

namespace detail {

inline std::vector<Square> move_squares(const Board& board) {
  std::vector<Square> out;
  board.for_each_legal_move([&](const Move& m) { out.push_back(m.at); });
  return out;
}

/// Checks every legal record reachable from `source` (each prefix is a record).
/// For each one: the image replays legally, maps back to the original, and
/// offers moves on exactly the same squares.
inline BijectionReport check_records(Board source, VariantMap map, std::optional<int> depth_limit) {
  BijectionReport report;
  auto fail = [&](const GameRecord& rec, const std::string& why) {
    ++report.failures;
    if (!report.first_failure) report.first_failure = why + " for record:\n" + format_record(rec);
  };
  auto check = [&]() {
    const GameRecord rec = record_of(source);
    if (map == VariantMap::StandardToComplementary && rec.moves.empty()) return;
    ++report.checked;
    const GameRecord image = map_record(rec, map);
    const auto replayed = verify_sequence(image);
    if (!replayed.legal) return fail(rec, "image illegal at move " + std::to_string(*replayed.first_illegal + 1));
    if (map_record(image, inverse(map)) != rec) return fail(rec, "round trip changed the record");
    if (move_squares(replay(image)) != move_squares(source)) return fail(rec, "legal move squares differ");
  };
  auto dfs = [&](auto&& self, int depth) -> void {
    check();
    if (depth_limit && depth >= *depth_limit) return;
    for (const Move& m : source.legal_moves()) {
      source.apply(m);
      self(self, depth + 1);
      source.undo();
    }
  };
  dfs(dfs, 0);
  return report;
}

}  // namespace detail

/// Exhaustively (or to depth_limit plies) maps every legal source record and
/// replays its image. Seeded sources are checked for every seed square, one
/// task per seed.
inline BijectionReport verify_bijection(int n, VariantMap map, std::optional<int> depth_limit = std::nullopt,
                                        bool allow_large = false) {
  if (requires_even(map) != (n % 2 == 0))
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(map)) + " requires " +
                                                (requires_even(map) ? "even" : "odd") + " n, got n=" + std::to_string(n));
  if (!depth_limit) check_budget(n, allow_large, "verify_bijection");
  BijectionReport total;
  const VariantKind kind = source_kind(map);
  if (kind == VariantKind::Standard) {
    total = detail::check_records(Board(n, GameVariant::standard()), map, depth_limit);
    return total;
  }
  std::vector<std::future<BijectionReport>> tasks;
  for (int i = 0; i < n * n; ++i) {
    const Square seed = Square::from_index(i, n);
    const GameVariant v = kind == VariantKind::Complementary ? GameVariant::complementary(seed) : GameVariant::alternate(seed);
    tasks.push_back(std::async(std::launch::async, [=] { return detail::check_records(Board(n, v), map, depth_limit); }));
  }
  for (auto& t : tasks) total.merge(t.get());
  return total;
}

}  // namespace modq

#endif
