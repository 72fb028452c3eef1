#include <gtest/gtest.h>

#include <random>

#include "modq/record.hpp"
#include "modq/text_format.hpp"
#include "oracles.hpp"

using namespace modq;

TEST(BoardText, PrintsHeaderAndMarkers) {
  Board b(3);
  b.apply(Move::place(1, 1));
  EXPECT_EQ(format_board(b),
            "n=3 variant=Standard k=2\n"
            "Qxx\n"
            "xx.\n"
            "x.x\n");
}

TEST(BoardText, SeededVariantsCarryTheSeed) {
  const Board b(3, GameVariant::alternate({2, 2}));
  EXPECT_EQ(format_board(b),
            "n=3 variant=AlternateUniverse k=2 seed=2,2\n"
            "...\n"
            ".Q.\n"
            "...\n");
}

TEST(BoardText, RoundTripsRandomPositions) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const int k = 2 + trial % 3;
    GameVariant v = GameVariant::standard(k);
    if (trial % 5 == 3) v = GameVariant::alternate({1, 1});
    if (trial % 5 == 4) v = GameVariant::complementary({n, n});
    Board b = oracle::random_board(rng, n, v);
    const std::string text = format_board(b);
    const Board parsed = parse_board(text);
    EXPECT_TRUE(parsed.same_position(b));
    EXPECT_EQ(parsed.variant(), b.variant());
    EXPECT_EQ(format_board(parsed), text);
  }
}

TEST(BoardText, RejectsMalformedInput) {
  EXPECT_THROW(parse_board(""), Error);
  EXPECT_THROW(parse_board("n=2 variant=Standard\n..\n..\n"), Error);
  EXPECT_THROW(parse_board("n=2 variant=Bogus k=2\n..\n..\n"), Error);
  EXPECT_THROW(parse_board("n=2 variant=Standard k=2\n..\n"), Error);
  EXPECT_THROW(parse_board("n=2 variant=Standard k=2\n...\n..\n"), Error);
  EXPECT_THROW(parse_board("n=2 variant=Standard k=2\n.q\n..\n"), Error);
  EXPECT_THROW(parse_board("n=2 variant=AlternateUniverse k=2\nQ.\n..\n"), Error);
  // a closed square written as open
  EXPECT_THROW(parse_board("n=2 variant=Standard k=2\nQ.\n..\n"), Error);
  try {
    parse_board("n=0 variant=Standard k=2\n");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(BoardText, AcceptsCrLf) {
  const Board b = parse_board("n=2 variant=Standard k=2\r\nQx\r\nxx\r\n");
  EXPECT_TRUE(b.occupied({1, 1}));
  EXPECT_EQ(b.queen_count(), 1);
}

TEST(RecordText, PrintsOneMovePerLine) {
  const GameRecord rec{3, GameVariant::standard(), {Move::place(2, 1), Move::place(1, 3)}};
  EXPECT_EQ(format_record(rec), "n=3 variant=Standard k=2\nP 2 1\nP 1 3\n");
  const GameRecord comp{2, GameVariant::complementary({1, 1}), {Move::remove(1, 2)}};
  EXPECT_EQ(format_record(comp), "n=2 variant=Complementary k=2 seed=1,1\nR 1 2\n");
}

TEST(RecordText, RoundTripsPlayedGames) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const GameVariant v = trial % 3 == 2 ? GameVariant::complementary({1, n}) : GameVariant::standard();
    const GameRecord rec = record_of(oracle::random_board(rng, n, v));
    EXPECT_EQ(parse_record(format_record(rec)), rec);
  }
}

TEST(RecordText, RejectsMalformedMoves) {
  EXPECT_THROW(parse_record("n=3 variant=Standard k=2\nP 1\n"), Error);
  EXPECT_THROW(parse_record("n=3 variant=Standard k=2\nX 1 1\n"), Error);
  EXPECT_THROW(parse_record("n=3 variant=Standard k=2\nP 1 1 1\n"), Error);
  EXPECT_THROW(parse_record("n=3 variant=Standard k=2\nP a 1\n"), Error);
  EXPECT_THROW(parse_record("P 1 1\n"), Error);
}

TEST(RecordText, ParsedMovesAreNotValidatedUntilReplay) {
  const GameRecord rec = parse_record("n=3 variant=Standard k=2\nP 1 1\nP 1 2\n");
  const ReplayReport rep = verify_sequence(rec);
  EXPECT_FALSE(rep.legal);
  EXPECT_EQ(rep.first_illegal, 1u);
}
