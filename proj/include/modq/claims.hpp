#ifndef MODQ_CLAIMS_HPP
#define MODQ_CLAIMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "modq/constructions.hpp"
#include "modq/solver.hpp"
#include "modq/variants.hpp"

namespace modq {

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline bool empty_counts_in(const Board& board, std::initializer_list<int> allowed) {
  for (int i = 0; i < board.square_count(); ++i) {
    const Square s = Square::from_index(i, board.size());
    if (board.occupied(s)) continue;
    const int count = board.attackers(s);
    if (std::find(allowed.begin(), allowed.end(), count) == allowed.end()) return false;
  }
  return true;
}

inline std::uint64_t factorial_saturating(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) {
    if (f > UINT64_MAX / i) return UINT64_MAX;
    f *= i;
  }
  return f;
}

}  // namespace detail

inline ClaimResult check_odd_complete(int max_n) {
  ClaimResult r{"odd-complete", true, ""};
  for (int n = 1; n <= max_n; n += 2) {
    const auto rep = verify_sequence(odd_complete_sequence(n));
    if (!rep.legal || rep.final_class != BoardClass::Complete || rep.queens != n * n) {
      r.passed = false;
      r.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  if (r.passed) r.detail = "complete boards for odd n <= " + std::to_string(max_n);
  return r;
}

inline ClaimResult check_even_no_complete(int max_n) {
  ClaimResult r{"even-no-complete", true, ""};
  for (int n = 2; n <= max_n; n += 2) {
    for (int i = 0; i < n * n; ++i) {
      std::vector<std::uint8_t> occ(n * n, 1);
      occ[i] = 0;
      const Board b = Board::from_occupancy(n, GameVariant::standard(), occ);
      if (b.attackers(Square::from_index(i, n)) % 2 == 0) {
        r.passed = false;
        r.detail += "n=" + std::to_string(n) + " square " + Square::from_index(i, n).to_string() + " even; ";
      }
    }
  }
  for (int n = 2; n <= std::min(max_n, kExhaustiveMaxN); n += 2) {
    // Standard games add one queen per move, so a complete game has n^2 moves.
    const auto stats = enumerate_games(n, GameVariant::standard());
    if (stats.max_depth >= n * n) {
      r.passed = false;
      r.detail += "n=" + std::to_string(n) + " reached a complete board; ";
    }
  }
  if (r.passed) r.detail = "last square always odd for even n <= " + std::to_string(max_n) + "; no complete game at n<=4";
  return r;
}

inline ClaimResult check_even_near_complete(int max_n) {
  ClaimResult r{"even-near-complete", true, ""};
  for (int n = 4; n <= max_n; n += 2) {
    const auto rep = verify_sequence(even_near_complete_sequence(n));
    if (!rep.legal || rep.final_class != BoardClass::Locked || rep.queens != n * n - 2) {
      r.passed = false;
      r.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  if (max_n >= 4) {
    const auto best = max_locked_queens(4);
    if (!best || best->count != 14) {
      r.passed = false;
      r.detail += "max locked at n=4 is not 14; ";
    }
  }
  if (r.passed) r.detail = "n^2-2 locked records for even 4 <= n <= " + std::to_string(max_n) + "; max locked(4) = 14";
  return r;
}

inline ClaimResult check_odd_locked(int max_n) {
  ClaimResult r{"odd-locked", true, ""};
  for (int n = 3; n <= max_n; n += 2) {
    const GameRecord rec = odd_locked_sequence(n);
    const auto rep = verify_sequence(rec);
    if (!rep.legal || rep.final_class != BoardClass::Locked || rec.moves.size() != static_cast<std::size_t>(2 * n - 1) ||
        !detail::empty_counts_in(replay(rec), {3, 5})) {
      r.passed = false;
      r.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  if (r.passed) r.detail = "2n-1 queen locks for odd 3 <= n <= " + std::to_string(max_n);
  return r;
}

inline ClaimResult check_even_locked(int max_n) {
  ClaimResult r{"even-locked", true, ""};
  for (int n = 4; n <= max_n; n += 2) {
    const GameRecord rec = even_locked_sequence(n);
    const auto rep = verify_sequence(rec);
    if (!rep.legal || rep.final_class != BoardClass::Locked || rec.moves.size() != static_cast<std::size_t>(2 * n - 3)) {
      r.passed = false;
      r.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  if (r.passed) r.detail = "2n-3 queen locks for even 4 <= n <= " + std::to_string(max_n);
  return r;
}

inline ClaimResult check_single_queen_locks() {
  ClaimResult r{"single-queen-locks", true, ""};
  for (int i = 0; i < 4; ++i) {
    Board b(2);
    b.apply({Action::Place, Square::from_index(i, 2)});
    if (b.classify() != BoardClass::Locked) r.passed = false;
  }
  for (int i = 0; i < 9; ++i) {
    Board b(3);
    const Square s = Square::from_index(i, 3);
    b.apply({Action::Place, s});
    const bool locked = b.classify() == BoardClass::Locked;
    if (locked != (s == Square{2, 2})) r.passed = false;
  }
  r.detail = r.passed ? "any queen locks 2x2; only the center locks 3x3" : "single-queen lock pattern differs";
  return r;
}

inline ClaimResult check_bijections() {
  ClaimResult r{"bijections", true, ""};
  const auto even = verify_bijection(2, VariantMap::ComplementaryToAlternate);
  const auto even_back = verify_bijection(2, VariantMap::AlternateToComplementary);
  const auto odd = verify_bijection(3, VariantMap::ComplementaryToStandard);
  const auto odd_back = verify_bijection(3, VariantMap::StandardToComplementary);
  const std::uint64_t failures = even.failures + even_back.failures + odd.failures + odd_back.failures;
  r.passed = failures == 0;
  r.detail = "checked " + std::to_string(even.checked + even_back.checked + odd.checked + odd_back.checked) +
             " records, " + std::to_string(failures) + " failures";
  return r;
}

inline ClaimResult check_counting_bounds(int max_n) {
  ClaimResult r{"counting-bounds", true, ""};
  for (int n = 1; n <= std::min(max_n, kExhaustiveMaxN); ++n) {
    const auto stats = enumerate_games(n, GameVariant::standard());
    const auto states = count_reachable_states(n);
    if (stats.leaf_count > detail::factorial_saturating(n * n)) r.passed = false;
    if (n * n < 64 && states.raw > (std::uint64_t{1} << (n * n))) r.passed = false;
    r.detail += "n=" + std::to_string(n) + ": games=" + std::to_string(stats.leaf_count) +
                " states=" + std::to_string(states.raw) + "; ";
  }
  return r;
}

inline const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {"odd-complete", "even-no-complete", "even-near-complete", "odd-locked",
                                                 "even-locked",  "single-queen-locks", "bijections", "counting-bounds"};
  return names;
}

inline ClaimResult check_claim(const std::string& name, int max_n) {
  if (name == "odd-complete") return check_odd_complete(max_n);
  if (name == "even-no-complete") return check_even_no_complete(max_n);
  if (name == "even-near-complete") return check_even_near_complete(max_n);
  if (name == "odd-locked") return check_odd_locked(max_n);
  if (name == "even-locked") return check_even_locked(max_n);
  if (name == "single-queen-locks") return check_single_queen_locks();
  if (name == "bijections") return check_bijections();
  if (name == "counting-bounds") return check_counting_bounds(max_n);
  throw Error(ErrorCode::InvalidArgument, "unknown claim '" + name + "'");
}

}  // namespace modq

#endif
