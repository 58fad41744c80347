#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pawns/board.hpp"
#include "pawns/oracle.hpp"

using pawns::attacks;
using pawns::Board;
using pawns::Cell;

TEST_CASE("attacks means diagonal adjacency") {
  REQUIRE(attacks({1, 1}, {2, 2}));
  REQUIRE(attacks({2, 2}, {1, 3}));
  REQUIRE_FALSE(attacks({1, 1}, {1, 2}));  // same-row neighbors
  REQUIRE_FALSE(attacks({1, 1}, {2, 1}));  // same-column neighbors
  REQUIRE_FALSE(attacks({1, 1}, {3, 3}));  // distance two
}

TEST_CASE("attacks is symmetric and irreflexive over a 10x10 range") {
  for (int r1 = 1; r1 <= 10; ++r1) {
    for (int c1 = 1; c1 <= 10; ++c1) {
      REQUIRE_FALSE(attacks({r1, c1}, {r1, c1}));
      for (int r2 = 1; r2 <= 10; ++r2) {
        for (int c2 = 1; c2 <= 10; ++c2) {
          REQUIRE(attacks({r1, c1}, {r2, c2}) == attacks({r2, c2}, {r1, c1}));
        }
      }
    }
  }
}

TEST_CASE("board validates and canonicalizes its pawns") {
  const Board b(2, 3, {{2, 1}, {1, 3}, {1, 1}});
  REQUIRE(b.pawns() == std::vector<Cell>{{1, 1}, {1, 3}, {2, 1}});
  REQUIRE_THROWS_AS(Board(2, 2, {{3, 1}}), pawns::CellOutOfRange);
  REQUIRE_THROWS_AS(Board(2, 2, {{0, 1}}), pawns::CellOutOfRange);
  REQUIRE_THROWS_AS(Board(2, 2, {{1, 1}, {1, 1}}), pawns::DuplicateCell);
  REQUIRE_THROWS_AS(Board(0, 2), pawns::InvalidArgument);
}

TEST_CASE("independence examples") {
  REQUIRE(pawns::is_independent(Board(2, 2, {{1, 1}, {1, 2}})));
  REQUIRE_FALSE(pawns::is_independent(Board(2, 2, {{1, 1}, {2, 2}})));
}

TEST_CASE("the example 6x6 arrangement is independent and maximum") {
  const Board b(6, 6, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 6},
                       {3, 1}, {3, 6}, {4, 1}, {4, 3}, {4, 4}, {4, 6},
                       {5, 6}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 6}});
  REQUIRE(pawns::is_independent(b));
  REQUIRE(static_cast<int>(b.pawns().size()) == pawns::max_pawn_count(6, 6));
  const auto every = pawns::enumerate_max_arrangements(6, 6);
  REQUIRE(std::find(every.begin(), every.end(), b) != every.end());
}

TEST_CASE("violations lists each attacking pair once, row-major") {
  REQUIRE(pawns::violations(Board(2, 2, {{1, 1}, {1, 2}})).empty());

  const auto single = pawns::violations(Board(2, 2, {{1, 1}, {2, 2}}));
  REQUIRE(single ==
          std::vector<std::pair<Cell, Cell>>{{{1, 1}, {2, 2}}});

  const auto one_of_three =
      pawns::violations(Board(2, 4, {{1, 1}, {1, 2}, {2, 3}}));
  REQUIRE(one_of_three ==
          std::vector<std::pair<Cell, Cell>>{{{1, 2}, {2, 3}}});

  const auto many = pawns::violations(
      Board(3, 3, {{1, 1}, {2, 2}, {3, 1}, {3, 3}}));
  REQUIRE(many == std::vector<std::pair<Cell, Cell>>{
                      {{1, 1}, {2, 2}}, {{2, 2}, {3, 1}}, {{2, 2}, {3, 3}}});
}

TEST_CASE("independence agrees with emptiness of violations") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<int> pawn_count(0, 8);
  std::vector<Cell> all_cells;
  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) all_cells.push_back({r, c});
  }
  for (int trial = 0; trial < 10000; ++trial) {
    std::shuffle(all_cells.begin(), all_cells.end(), rng);
    const int k = pawn_count(rng);
    const Board b(4, 4, std::vector<Cell>(all_cells.begin(),
                                          all_cells.begin() + k));
    REQUIRE(pawns::is_independent(b) == pawns::violations(b).empty());
  }
}

TEST_CASE("exactly four 2-pawn placements on a 2x2 board are independent") {
  std::vector<Cell> cells = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::set<Board> independent;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Board b(2, 2, {cells[i], cells[j]});
      if (pawns::is_independent(b)) independent.insert(b);
    }
  }
  const std::set<Board> expected = {
      Board(2, 2, {{1, 1}, {1, 2}}),  // top row
      Board(2, 2, {{1, 2}, {2, 2}}),  // right column
      Board(2, 2, {{2, 1}, {2, 2}}),  // bottom row
      Board(2, 2, {{1, 1}, {2, 1}}),  // left column
  };
  REQUIRE(independent == expected);
}

TEST_CASE("ascii rendering is bit-exact") {
  REQUIRE(pawns::render_ascii(Board(2, 2, {{1, 1}, {1, 2}})) == "PP\n..\n");
  REQUIRE(pawns::render_ascii(Board(2, 2, {{1, 1}, {2, 1}})) == "P.\nP.\n");
  REQUIRE(pawns::render_ascii(Board(1, 1)) == ".\n");
}

TEST_CASE("ascii parsing inverts rendering") {
  const Board b(3, 4, {{1, 2}, {2, 4}, {3, 1}});
  REQUIRE(pawns::parse_ascii(pawns::render_ascii(b)) == b);
  REQUIRE(pawns::parse_ascii("PP\n..") == Board(2, 2, {{1, 1}, {1, 2}}));
  REQUIRE_THROWS_AS(pawns::parse_ascii(""), pawns::ParseError);
  REQUIRE_THROWS_AS(pawns::parse_ascii("P.\nP"), pawns::ParseError);
  REQUIRE_THROWS_AS(pawns::parse_ascii("PX\n..\n"), pawns::ParseError);
}

TEST_CASE("transpose maps cells and dimensions") {
  const Board b(2, 3, {{1, 2}, {2, 3}});
  const Board t = pawns::transpose(b);
  REQUIRE(t.rows() == 3);
  REQUIRE(t.cols() == 2);
  REQUIRE(t.pawns() == std::vector<Cell>{{2, 1}, {3, 2}});
  REQUIRE(pawns::transpose(t) == b);
}
