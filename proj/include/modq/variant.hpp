#ifndef MODQ_VARIANT_HPP
#define MODQ_VARIANT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "modq/error.hpp"
#include "modq/square.hpp"

namespace modq {

enum class VariantKind { Standard, AlternateUniverse, Complementary };

inline const char* to_string(VariantKind kind) {
  switch (kind) {
    case VariantKind::Standard: return "Standard";
    case VariantKind::AlternateUniverse: return "AlternateUniverse";
    case VariantKind::Complementary: return "Complementary";
  }
  return "?";
}

inline VariantKind parse_variant_kind(std::string_view text) {
  if (text == "Standard" || text == "standard") return VariantKind::Standard;
  if (text == "AlternateUniverse" || text == "alternate" || text == "alternate-universe")
    return VariantKind::AlternateUniverse;
  if (text == "Complementary" || text == "complementary") return VariantKind::Complementary;
  throw Error(ErrorCode::InvalidArgument, "unknown variant '" + std::string(text) + "'");
}

/// Rule set of a game. Standard play with modulus k opens a square when its
/// attacker count is 0 mod k. The alternate universe opens squares whose count is
/// 1 mod k and starts from one pre-placed queen on the seed square. The
/// complementary game starts full, removes the seed queen as setup, and lets a
/// queen be removed when the other queens attacking her number 0 mod k.
struct GameVariant {
  VariantKind kind = VariantKind::Standard;
  int modulus = 2;
  std::optional<Square> seed;

  bool operator==(const GameVariant&) const = default;

  static GameVariant standard(int modulus = 2) { return {VariantKind::Standard, modulus, std::nullopt}; }
  static GameVariant alternate(Square seed) { return {VariantKind::AlternateUniverse, 2, seed}; }
  static GameVariant complementary(Square seed) { return {VariantKind::Complementary, 2, seed}; }

  bool needs_seed() const { return kind != VariantKind::Standard; }

  /// Throws InvalidArgument unless the variant is well formed for an n x n board.
  void validate(int n) const {
    if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 2");
    if (needs_seed()) {
      if (!seed) throw Error(ErrorCode::InvalidArgument, std::string(to_string(kind)) + " requires a seed square");
      if (!seed->on_board(n))
        throw Error(ErrorCode::InvalidArgument, "seed square " + seed->to_string() + " is off the board");
    } else if (seed) {
      throw Error(ErrorCode::InvalidArgument, "Standard play takes no seed square");
    }
  }
};

}  // namespace modq

#endif
