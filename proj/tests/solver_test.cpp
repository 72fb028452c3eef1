#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <sstream>

#include "modq/dot.hpp"
#include "modq/solver.hpp"
#include "oracles.hpp"

using namespace modq;

namespace {

struct OracleGraph {
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

// Orbits of reachable positions, and distinct (orbit, child orbit) pairs.
OracleGraph oracle_graph(int n) {
  std::set<std::string> orbits;
  std::set<std::pair<std::string, std::string>> arcs;
  for (const std::string& s : oracle::reachable(n)) {
    const oracle::Grid g = oracle::from_bits(s);
    const std::string from = oracle::canonical_bits(g, n);
    orbits.insert(from);
    for (int idx : oracle::open_squares(g, n)) {
      oracle::Grid child = g;
      child[idx] = 1;
      arcs.insert({from, oracle::canonical_bits(child, n)});
    }
  }
  return {orbits.size(), arcs.size()};
}

std::pair<int, int> oracle_locked_range(int n) {
  int lo = n * n + 1, hi = -1;
  for (const std::string& s : oracle::reachable(n)) {
    const oracle::Grid g = oracle::from_bits(s);
    const int queens = static_cast<int>(std::count(s.begin(), s.end(), '1'));
    if (oracle::open_squares(g, n).empty() && queens < n * n) {
      lo = std::min(lo, queens);
      hi = std::max(hi, queens);
    }
  }
  return {lo, hi};
}

// Minimal structural reading of the DOT text: header, node and edge statements,
// closing brace, balanced quotes, and no edge referring to an undeclared node.
bool dot_is_well_formed(const std::string& dot, std::size_t nodes, std::size_t edges) {
  std::istringstream in(dot);
  std::string line;
  if (!std::getline(in, line) || line != "digraph game_graph {") return false;
  const std::regex node_re(R"(  n(\d+) \[label="[^"]*"(, [a-z]+=[a-z]+)*\];)");
  const std::regex edge_re(R"(  n(\d+) -> n(\d+) \[label="\d+,\d+"\];)");
  std::set<std::size_t> declared;
  std::size_t seen_edges = 0;
  bool closed = false;
  while (std::getline(in, line)) {
    if (closed) return false;
    std::smatch m;
    if (line == "}") {
      closed = true;
    } else if (line.rfind("  //", 0) == 0 || line == "  node [shape=circle, fontsize=10];") {
      continue;
    } else if (std::regex_match(line, m, node_re)) {
      declared.insert(std::stoul(m[1]));
    } else if (std::regex_match(line, m, edge_re)) {
      if (!declared.count(std::stoul(m[1])) || !declared.count(std::stoul(m[2]))) return false;
      ++seen_edges;
    } else {
      return false;
    }
  }
  return closed && declared.size() == nodes && seen_edges == edges;
}

}  // namespace

TEST(Enumerate, MatchesPlainTreeWalk) {
  for (int n = 1; n <= 3; ++n) {
    const oracle::TreeCensus census = oracle::census(n);
    for (bool sym : {true, false}) {
      EnumerateOptions opts;
      opts.use_symmetry = sym;
      const EnumerationStats stats = enumerate_games(n, GameVariant::standard(), opts);
      EXPECT_EQ(stats.leaf_count, census.leaves) << n;
      for (const auto& [depth, count] : census.by_depth) {
        ASSERT_LT(static_cast<std::size_t>(depth), stats.leaves_by_depth.size());
        EXPECT_EQ(stats.leaves_by_depth[depth], count) << n << " depth " << depth;
      }
      EXPECT_EQ(stats.min_depth, census.by_depth.begin()->first);
      EXPECT_EQ(stats.max_depth, census.by_depth.rbegin()->first);
      if (!sym) {
        ASSERT_TRUE(stats.terminal_positions.has_value());
        EXPECT_EQ(*stats.terminal_positions, census.terminal_positions.size());
      }
    }
  }
}

TEST(Enumerate, KnownSmallCounts) {
  EXPECT_EQ(enumerate_games(1, GameVariant::standard()).leaf_count, 1u);
  const auto two = enumerate_games(2, GameVariant::standard());
  EXPECT_EQ(two.leaf_count, 4u);
  EXPECT_EQ(two.min_depth, 1);
  EXPECT_EQ(two.max_depth, 1);
  const auto three = enumerate_games(3, GameVariant::standard());
  EXPECT_EQ(three.leaf_count, 2177u);
  EXPECT_EQ(three.terminal_orbits, 6u);
  EXPECT_EQ(three.max_depth, 9);
}

TEST(Enumerate, FourByFourSymmetryToggleAgrees) {
  const auto with = enumerate_games(4, GameVariant::standard());
  EnumerateOptions raw;
  raw.use_symmetry = false;
  const auto without = enumerate_games(4, GameVariant::standard(), raw);
  EXPECT_EQ(with.leaf_count, without.leaf_count);
  EXPECT_EQ(with.leaves_by_depth, without.leaves_by_depth);
  EXPECT_EQ(with.terminal_orbits, without.terminal_orbits);
  EXPECT_LT(with.positions_visited, without.positions_visited);
  EXPECT_EQ(with.leaf_count, 1262716000u);
  EXPECT_EQ(with.max_depth, 14);
  EXPECT_EQ(*without.terminal_positions, 864u);
}

TEST(Enumerate, DepthLimitCountsTruncatedSequences) {
  EnumerateOptions opts;
  opts.depth_limit = 1;
  const auto stats = enumerate_games(3, GameVariant::standard(), opts);
  EXPECT_EQ(stats.leaf_count, 1u);  // the centre closes every other square
  EXPECT_EQ(stats.truncated, 8u);
  opts.depth_limit = 0;
  EXPECT_EQ(enumerate_games(3, GameVariant::standard(), opts).truncated, 1u);
  opts.depth_limit = -1;
  EXPECT_THROW(enumerate_games(3, GameVariant::standard(), opts), Error);
}

TEST(Enumerate, GuardRefusesLargeBoardsUnlessAllowed) {
  try {
    enumerate_games(5, GameVariant::standard());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EnumerateOptions opts;
  opts.depth_limit = 2;
  const auto limited = enumerate_games(5, GameVariant::standard(), opts);
  EXPECT_EQ(limited.leaf_count, 0u);
  EXPECT_GT(limited.truncated, 0u);
  EXPECT_THROW(build_game_graph(5, GameVariant::standard()), Error);
  EXPECT_THROW(solve_game(5, GameVariant::standard()), Error);
  EXPECT_THROW(max_locked_queens(5), Error);
  EXPECT_THROW(count_reachable_states(5), Error);
}

TEST(GameGraph, TwoByTwoIsOneMove) {
  const GameGraph g = build_game_graph(2, GameVariant::standard());
  ASSERT_EQ(g.nodes.size(), 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.nodes[1].cls, BoardClass::Locked);
  EXPECT_EQ(g.nodes[1].queens, 1);
}

TEST(GameGraph, ThreeByThreeShape) {
  const GameGraph g = build_game_graph(3, GameVariant::standard());
  EXPECT_EQ(g.children(g.root).size(), 3u);  // corner, edge, centre
  EXPECT_EQ(g.nodes.size(), 41u);
  EXPECT_EQ(g.edges.size(), 66u);
  const auto complete = std::count_if(g.nodes.begin(), g.nodes.end(), [](const GraphNode& n) {
    return n.cls == BoardClass::Complete;
  });
  EXPECT_EQ(complete, 1);
}

TEST(GameGraph, MatchesOrbitOracle) {
  for (int n = 1; n <= 4; ++n) {
    const GameGraph g = build_game_graph(n, GameVariant::standard());
    const OracleGraph o = oracle_graph(n);
    EXPECT_EQ(g.nodes.size(), o.nodes) << n;
    EXPECT_EQ(g.edges.size(), o.edges) << n;
  }
  const GameGraph four = build_game_graph(4, GameVariant::standard());
  EXPECT_EQ(four.nodes.size(), 4289u);
  EXPECT_EQ(four.edges.size(), 16821u);
}

TEST(GameGraph, EdgesAreLegalMovesAndLeavesAreTerminal) {
  for (int n = 2; n <= 4; ++n) {
    const GameGraph g = build_game_graph(n, GameVariant::standard());
    std::vector<int> out_degree(g.nodes.size(), 0);
    for (const GraphEdge& e : g.edges) {
      ++out_degree[e.from];
      Board b = Board::from_occupancy(n, g.variant, g.nodes[e.from].representative);
      ASSERT_TRUE(b.is_legal(e.label));
      b.apply(e.label);
      EXPECT_EQ(b.canonical_key(), g.nodes[e.to].key);
      EXPECT_EQ(g.nodes[e.to].queens, g.nodes[e.from].queens + 1);
    }
    std::size_t terminal_nodes = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const bool terminal = g.nodes[i].cls != BoardClass::Unlocked;
      EXPECT_EQ(out_degree[i] == 0, terminal);
      terminal_nodes += terminal;
    }
    EXPECT_EQ(terminal_nodes, enumerate_games(n, GameVariant::standard()).terminal_orbits);
  }
}

TEST(GameGraph, OtherVariantsBuild) {
  const GameGraph alt = build_game_graph(3, GameVariant::alternate({2, 2}));
  EXPECT_EQ(alt.nodes[0].queens, 1);
  const GameGraph comp = build_game_graph(3, GameVariant::complementary({1, 1}));
  EXPECT_EQ(comp.nodes[0].queens, 8);
  for (const GraphEdge& e : comp.edges) EXPECT_EQ(e.label.action, Action::Remove);
}

TEST(Solve, MatchesPlainRecursion) {
  for (int n = 1; n <= 3; ++n) {
    oracle::Grid g(n * n, 0);
    const bool wins = oracle::first_player_wins(g, n);
    EXPECT_EQ(solve_game(n, GameVariant::standard()).value == GameValue::Win, wins) << n;
  }
  // Also from random mid-game positions on 4x4.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Board b = oracle::random_board(rng, 4);
    if (b.queen_count() < 4) continue;
    oracle::Grid g = b.occupancy();
    EXPECT_EQ(solve_position(b).value == GameValue::Win, oracle::first_player_wins(g, 4));
  }
}

TEST(Solve, SmallBoardValues) {
  const auto one = solve_game(1, GameVariant::standard());
  EXPECT_EQ(one.value, GameValue::Win);
  EXPECT_EQ(one.best_move, Move::place(1, 1));
  const auto two = solve_game(2, GameVariant::standard());
  EXPECT_EQ(two.value, GameValue::Win);
  const auto three = solve_game(3, GameVariant::standard());
  EXPECT_EQ(three.value, GameValue::Win);
  ASSERT_TRUE(three.best_move.has_value());
  // The centre is a winning first move too.
  Board centre(3);
  centre.apply(Move::place(2, 2));
  EXPECT_EQ(solve_position(centre).value, GameValue::Loss);
}

TEST(Solve, FourByFourFrozen) {
  const auto r = solve_game(4, GameVariant::standard());
  EXPECT_EQ(r.value, GameValue::Win);
  EXPECT_EQ(r.best_move, Move::place(1, 1));
  EXPECT_EQ(r.node_count, 1802u);
}

TEST(Solve, MemoModesAgree) {
  for (int n = 1; n <= 4; ++n) {
    std::optional<SolveResult> first;
    for (MemoMode mode : {MemoMode::None, MemoMode::Raw, MemoMode::Canonical}) {
      if (mode == MemoMode::None && n == 4) continue;
      SolveOptions opts;
      opts.memo = mode;
      const auto r = solve_game(n, GameVariant::standard(), opts);
      if (!first) first = r;
      EXPECT_EQ(r.value, first->value);
      EXPECT_EQ(r.best_move, first->best_move);
    }
  }
}

TEST(Solve, BestMoveLeadsToLoss) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Board b = oracle::random_board(rng, 1 + trial % 4);
    const auto r = solve_position(b);
    if (r.value == GameValue::Loss) {
      EXPECT_FALSE(r.best_move.has_value());
      for (const Move& m : b.legal_moves()) {
        Board child = b;
        child.apply(m);
        EXPECT_EQ(solve_position(child).value, GameValue::Win);
      }
      continue;
    }
    ASSERT_TRUE(r.best_move.has_value());
    Board child = b;
    child.apply(*r.best_move);
    EXPECT_EQ(solve_position(child).value, GameValue::Loss);
  }
}

TEST(Solve, GraphRecursionAgreesOnEveryNode) {
  const GameGraph g = build_game_graph(4, GameVariant::standard());
  // Nodes are discovered in breadth-first order by queen count; evaluate backwards.
  std::vector<GameValue> value(g.nodes.size(), GameValue::Loss);
  std::vector<std::vector<std::size_t>> kids(g.nodes.size());
  for (const GraphEdge& e : g.edges) kids[e.from].push_back(e.to);
  for (std::size_t i = g.nodes.size(); i-- > 0;) {
    for (std::size_t c : kids[i]) {
      if (value[c] == GameValue::Loss) value[i] = GameValue::Win;
    }
  }
  EXPECT_EQ(value[g.root], solve_game(4, GameVariant::standard()).value);
  for (std::size_t i = 0; i < g.nodes.size(); i += 97) {
    const Board b = Board::from_occupancy(4, g.variant, g.nodes[i].representative);
    EXPECT_EQ(solve_position(b).value, value[i]) << i;
  }
}

TEST(Solve, OtherVariantsAndModuli) {
  EXPECT_NO_THROW(solve_game(3, GameVariant::alternate({1, 1})));
  EXPECT_NO_THROW(solve_game(3, GameVariant::complementary({2, 2})));
  EXPECT_NO_THROW(solve_game(4, GameVariant::standard(3)));
}

TEST(Extremal, LockedRangeMatchesOracle) {
  for (int n = 2; n <= 4; ++n) {
    const auto [lo, hi] = oracle_locked_range(n);
    const auto mx = max_locked_queens(n);
    const auto mn = min_locked_queens(n);
    ASSERT_TRUE(mx && mn);
    EXPECT_EQ(mx->count, hi) << n;
    EXPECT_EQ(mn->count, lo) << n;
    for (const auto* r : {&*mx, &*mn}) {
      const auto rep = verify_sequence(r->witness);
      EXPECT_TRUE(rep.legal);
      EXPECT_EQ(rep.final_class, BoardClass::Locked);
      EXPECT_EQ(rep.queens, r->count);
    }
  }
  EXPECT_EQ(max_locked_queens(4)->count, 14);
  EXPECT_EQ(min_locked_queens(4)->count, 5);
  EXPECT_EQ(max_locked_queens(3)->count, 5);
  EXPECT_EQ(min_locked_queens(3)->count, 1);
}

TEST(Extremal, OneByOneHasNoLockedBoard) {
  EXPECT_FALSE(max_locked_queens(1).has_value());
  EXPECT_FALSE(min_locked_queens(1).has_value());
}

TEST(States, CountsMatchOracle) {
  for (int n = 1; n <= 4; ++n) {
    const auto reach = oracle::reachable(n);
    std::set<std::string> orbits;
    for (const auto& s : reach) orbits.insert(oracle::canonical_bits(oracle::from_bits(s), n));
    const StateCount c = count_reachable_states(n);
    EXPECT_EQ(c.raw, reach.size()) << n;
    EXPECT_EQ(c.canonical, orbits.size()) << n;
  }
  EXPECT_EQ(count_reachable_states(2).raw, 5u);
  EXPECT_EQ(count_reachable_states(3).raw, 219u);
  EXPECT_EQ(count_reachable_states(3).canonical, 41u);
  EXPECT_EQ(count_reachable_states(4).raw, 33043u);
}

TEST(Dot, StructureAndStyling) {
  for (int n = 2; n <= 4; ++n) {
    const GameGraph g = build_game_graph(n, GameVariant::standard());
    const std::string dot = export_dot(g);
    EXPECT_TRUE(dot_is_well_formed(dot, g.nodes.size(), g.edges.size())) << n;
  }
  const std::string dot = export_dot(build_game_graph(3, GameVariant::standard()));
  EXPECT_NE(dot.find("shape=doublecircle"), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=black"), std::string::npos);
  EXPECT_EQ(dot, export_dot(build_game_graph(3, GameVariant::standard())));
}

TEST(Dot, DigestIsStableHex) {
  const Board b(3);
  const std::string d = key_digest(b.canonical_key());
  EXPECT_EQ(d.size(), 16u);
  EXPECT_TRUE(std::regex_match(d, std::regex("[0-9a-f]{16}")));
  Board moved(3);
  moved.apply(Move::place(1, 1));
  EXPECT_NE(key_digest(moved.canonical_key()), d);
  EXPECT_EQ(key_digest(moved.transformed(Symmetry::Rotate90).canonical_key()), key_digest(moved.canonical_key()));
}
