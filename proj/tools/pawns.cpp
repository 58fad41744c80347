// Command-line front end: counting, enumeration, subset encode/decode,
// rank/unrank, strip-matrix printing, and the self-verification suite.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "CLI11.hpp"

#include "pawns/bijection.hpp"
#include "pawns/board.hpp"
#include "pawns/errors.hpp"
#include "pawns/json_io.hpp"
#include "pawns/oracle.hpp"
#include "pawns/strip_matrix.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pawns::Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Board files may be JSON or an ASCII grid; JSON starts with '{'.
pawns::Board load_board(const std::string& path) {
  const std::string text = read_input(path);
  for (const char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return pawns::board_from_json(text);
    break;
  }
  return pawns::parse_ascii(text);
}

void require_even(int rows, int cols, const std::string& what) {
  if (rows % 2 != 0 || cols % 2 != 0) {
    throw pawns::OddDimensions("odd dimensions: " + what +
                               " needs even --rows and --cols, got " +
                               std::to_string(rows) + "x" +
                               std::to_string(cols));
  }
}

void print_board(const pawns::Board& b, const std::string& format) {
  if (format == "json") {
    std::cout << pawns::to_json(b) << '\n';
  } else {
    std::cout << pawns::render_ascii(b);
  }
}

// All n-subsets of [1, N] in ascending lexicographic order.
std::vector<std::vector<int>> all_subsets(int N, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == N - (n - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int run_count(int rows, int cols, const std::string& method) {
  mpz_class result;
  if (method == "formula") {
    require_even(rows, cols, "--method formula");
    result = pawns::arrangement_count(rows / 2, cols / 2);
  } else if (method == "chains") {
    require_even(rows, cols, "--method chains");
    result = pawns::count_via_strip_chains(rows / 2, cols / 2);
  } else {
    result = pawns::count_max_arrangements(rows, cols).num_max_arrangements;
  }
  std::cout << result << '\n';
  return 0;
}

int run_strips(int m, const std::string& format) {
  const pawns::StripMatrix matrix(m);
  if (format == "json") {
    auto grid = nlohmann::ordered_json::array();
    for (int i = 1; i <= matrix.side(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int j = 1; j <= matrix.side(); ++j) {
        row.push_back(matrix.entry(i, j).str());
      }
      grid.push_back(std::move(row));
    }
    std::cout << grid.dump() << '\n';
    return 0;
  }
  for (int i = 1; i <= matrix.side(); ++i) {
    if (i > 1) std::cout << '\n';
    for (int j = 1; j <= matrix.side(); ++j) {
      if (j > 1) std::cout << ' ';
      std::cout << matrix.entry(i, j).str();
    }
    std::cout << '\n';
  }
  return 0;
}

int run_decode(int rows, int cols, const std::vector<int>& R,
               const std::vector<int>& C, const std::string& format) {
  require_even(rows, cols, "decode");
  const pawns::SubsetPair p(rows / 2, cols / 2, R, C);
  print_board(pawns::decode(p), format);
  return 0;
}

int run_encode(const std::string& file) {
  std::cout << pawns::to_json(pawns::encode(load_board(file))) << '\n';
  return 0;
}

int run_enumerate(int rows, int cols, long limit, const std::string& format) {
  const auto boards = pawns::enumerate_max_arrangements(rows, cols, limit);
  bool first = true;
  for (const pawns::Board& b : boards) {
    if (format == "ascii" && !first) std::cout << '\n';
    first = false;
    print_board(b, format);
  }
  return 0;
}

int run_rank(const std::string& file) {
  std::cout << pawns::rank(load_board(file)) << '\n';
  return 0;
}

int run_unrank(const std::string& index, int rows, int cols,
               const std::string& format) {
  require_even(rows, cols, "unrank");
  mpz_class k;
  try {
    k = mpz_class(index);
  } catch (const std::invalid_argument&) {
    throw pawns::InvalidArgument("--index must be a decimal integer, got '" +
                                 index + "'");
  }
  print_board(pawns::unrank(k, rows / 2, cols / 2), format);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: re-derives the library's structural identities from the raw attack
// model for every board shape with m+n <= max_semi and reports one line per
// check. The oracle's 14-column ceiling caps max_semi at 8.

struct CheckFailure {
  std::string detail;
};

void expect(bool ok, const std::string& detail) {
  if (!ok) throw CheckFailure{detail};
}

bool follow_table(pawns::SquareType left, pawns::SquareType right) {
  using pawns::SquareType;
  switch (left) {
    case SquareType::A: return right == SquareType::A || right == SquareType::B;
    case SquareType::B: return right == SquareType::B;
    case SquareType::C: return right == SquareType::C || right == SquareType::B;
    case SquareType::D: return true;
  }
  return false;
}

void check_square_tables() {
  for (const pawns::SquareType t : pawns::kSquareTypes) {
    expect(pawns::square_image(pawns::square_image(t)) == pawns::SquareType::C,
           "double image of a square type is not C");
    for (const pawns::SquareType u : pawns::kSquareTypes) {
      expect(pawns::can_follow(t, u) == follow_table(t, u),
             std::string("can_follow(") + pawns::to_char(t) + "," +
                 pawns::to_char(u) + ") deviates from the closed table");
    }
  }
}

void check_census(int m) {
  const auto strips = pawns::enumerate_strips(m);
  const std::size_t expected = static_cast<std::size_t>(m + 1) * (m + 1);
  expect(strips.size() == expected,
         "census size " + std::to_string(strips.size()) + " != " +
             std::to_string(expected) + " at m=" + std::to_string(m));
  const pawns::StripMatrix matrix(m);
  const std::set<pawns::Strip> entry_set(matrix.entries().begin(),
                                         matrix.entries().end());
  expect(entry_set.size() == expected,
         "matrix entries not pairwise distinct at m=" + std::to_string(m));
  expect(entry_set == strips,
         "matrix entries differ from enumerated strips at m=" +
             std::to_string(m));
}

void check_action_laws(int m) {
  using pawns::SquareType;
  const pawns::StripMatrix matrix(m);
  auto column_step = [](SquareType x, SquareType y) {
    return x == y || (x == SquareType::A && y == SquareType::D) ||
           (x == SquareType::B && y == SquareType::C);
  };
  auto row_step = [](SquareType x, SquareType y) {
    return x == y || (x == SquareType::A && y == SquareType::B) ||
           (x == SquareType::D && y == SquareType::C);
  };
  for (int j = 1; j <= matrix.side(); ++j) {
    for (int i = 1; i <= matrix.side(); ++i) {
      for (int i2 = i + 1; i2 <= matrix.side(); ++i2) {
        for (int k = 0; k < m; ++k) {
          expect(column_step(matrix.entry(i, j).word()[k],
                             matrix.entry(i2, j).word()[k]),
                 "column action law fails at m=" + std::to_string(m));
        }
      }
    }
  }
  for (int i = 1; i <= matrix.side(); ++i) {
    for (int j = 1; j <= matrix.side(); ++j) {
      for (int j2 = j + 1; j2 <= matrix.side(); ++j2) {
        for (int k = 0; k < m; ++k) {
          expect(row_step(matrix.entry(i, j).word()[k],
                          matrix.entry(i, j2).word()[k]),
                 "row action law fails at m=" + std::to_string(m));
        }
      }
    }
  }
}

void check_dominance(int m) {
  const pawns::StripMatrix matrix(m);
  for (int i = 1; i <= matrix.side(); ++i) {
    for (int j = 1; j <= matrix.side(); ++j) {
      for (int i2 = 1; i2 <= matrix.side(); ++i2) {
        for (int j2 = 1; j2 <= matrix.side(); ++j2) {
          const bool stackable =
              pawns::can_stack_strips(matrix.entry(i, j), matrix.entry(i2, j2));
          const bool dominated = i <= i2 && j <= j2;
          expect(stackable == dominated,
                 "stackability differs from index dominance at m=" +
                     std::to_string(m) + " for (" + std::to_string(i) + "," +
                     std::to_string(j) + ") over (" + std::to_string(i2) +
                     "," + std::to_string(j2) + ")");
        }
      }
    }
  }
}

void check_counts(int n, int m) {
  const mpz_class formula = pawns::arrangement_count(n, m);
  const mpz_class chains = pawns::count_via_strip_chains(n, m);
  const auto dp = pawns::count_max_arrangements(2 * n, 2 * m);
  const std::string shape =
      std::to_string(2 * n) + "x" + std::to_string(2 * m);
  expect(dp.num_max_arrangements == formula,
         "profile DP count differs from the closed form on " + shape);
  expect(chains == formula,
         "chain count differs from the closed form on " + shape);
  expect(dp.max_pawns == 2 * n * m,
         "maximum pawn count differs from 2nm on " + shape);
  expect(pawns::max_pawn_count(2 * n, 2 * m) == 2 * n * m,
         "max_pawn_count differs from 2nm on " + shape);
}

void check_odd_boards() {
  for (const int k : {3, 5, 7}) {
    const auto counted = pawns::count_max_arrangements(k, k);
    expect(counted.num_max_arrangements == 2,
           "odd " + std::to_string(k) + "x" + std::to_string(k) +
               " board does not have exactly 2 maximum arrangements");
    std::vector<pawns::Cell> row_fill, col_fill;
    for (int r = 1; r <= k; r += 2) {
      for (int c = 1; c <= k; ++c) row_fill.push_back({r, c});
    }
    for (int c = 1; c <= k; c += 2) {
      for (int r = 1; r <= k; ++r) col_fill.push_back({r, c});
    }
    std::set<pawns::Board> expected{pawns::Board(k, k, row_fill),
                                    pawns::Board(k, k, col_fill)};
    const auto boards = pawns::enumerate_max_arrangements(k, k);
    const std::set<pawns::Board> actual(boards.begin(), boards.end());
    expect(actual == expected,
           "odd-board maximum arrangements are not the row-fill and "
           "column-fill patterns at k=" + std::to_string(k));
  }
}

void check_bijection_totality(int n, int m) {
  const std::string shape = std::to_string(2 * n) + "x" + std::to_string(2 * m);
  std::vector<pawns::Board> image;
  for (const auto& R : all_subsets(m + n, n)) {
    for (const auto& C : all_subsets(m + n, n)) {
      const pawns::SubsetPair p(n, m, R, C);
      image.push_back(pawns::decode(p));
      expect(pawns::encode(image.back()) == p,
             "decode/encode round trip fails on " + shape);
    }
  }
  std::sort(image.begin(), image.end());
  expect(std::adjacent_find(image.begin(), image.end()) == image.end(),
         "decode is not injective on " + shape);
  std::vector<pawns::Board> oracle =
      pawns::enumerate_max_arrangements(2 * n, 2 * m);
  std::sort(oracle.begin(), oracle.end());
  expect(image == oracle,
         "decode image differs from the enumerated maximum arrangements on " +
             shape);
}

void check_rank_codec(int n, int m) {
  const mpz_class total = pawns::arrangement_count(n, m);
  for (mpz_class k = 0; k < total; ++k) {
    expect(pawns::rank(pawns::unrank(k, n, m)) == k,
           "rank/unrank round trip fails at k=" + k.get_str() + " for n=" +
               std::to_string(n) + ", m=" + std::to_string(m));
  }
}

int run_verify(int max_semi) {
  if (max_semi < 2 || max_semi > 8) {
    std::cerr << "error: --max-semi must be within [2, 8]\n";
    return 1;
  }
  std::vector<std::pair<std::string, std::function<void()>>> checks;
  checks.emplace_back("square-type tables", check_square_tables);
  for (int m = 1; m < max_semi; ++m) {
    checks.emplace_back("strip census m=" + std::to_string(m),
                        [m] { check_census(m); });
  }
  for (int m = 1; m < max_semi; ++m) {
    checks.emplace_back("matrix action laws m=" + std::to_string(m),
                        [m] { check_action_laws(m); });
  }
  for (int m = 1; m < max_semi; ++m) {
    checks.emplace_back("dominance order m=" + std::to_string(m),
                        [m] { check_dominance(m); });
  }
  for (int s = 2; s <= max_semi; ++s) {
    for (int n = 1; n < s; ++n) {
      const int m = s - n;
      checks.emplace_back(
          "counts " + std::to_string(2 * n) + "x" + std::to_string(2 * m),
          [n, m] { check_counts(n, m); });
    }
  }
  checks.emplace_back("odd boards", check_odd_boards);
  for (int s = 2; s <= max_semi; ++s) {
    for (int n = 1; n < s; ++n) {
      const int m = s - n;
      checks.emplace_back(
          "bijection " + std::to_string(2 * n) + "x" + std::to_string(2 * m),
          [n, m] { check_bijection_totality(n, m); });
    }
  }
  for (int s = 2; s <= std::min(max_semi, 5); ++s) {
    for (int n = 1; n < s; ++n) {
      const int m = s - n;
      checks.emplace_back(
          "rank codec " + std::to_string(2 * n) + "x" + std::to_string(2 * m),
          [n, m] { check_rank_codec(n, m); });
    }
  }

  for (const auto& [name, fn] : checks) {
    try {
      fn();
    } catch (const CheckFailure& f) {
      std::cerr << "FAIL " << name << ": " << f.detail << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "FAIL " << name << ": " << e.what() << '\n';
      return 2;
    }
    std::cout << "ok " << name << '\n';
  }
  std::cout << "all checks passed (max-semi " << max_semi << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum nonattacking-pawn arrangements on even-sided boards"};
  app.require_subcommand(1);

  int rows = 0, cols = 0, m = 0, max_semi = 5;
  long limit = -1;
  std::string method = "formula", format = "ascii", file, index;
  std::vector<int> subset_rows, subset_cols;

  auto* count_cmd =
      app.add_subcommand("count", "Count maximum arrangements of a board");
  count_cmd->add_option("--rows", rows, "Board rows")
      ->required()
      ->check(CLI::PositiveNumber);
  count_cmd->add_option("--cols", cols, "Board columns")
      ->required()
      ->check(CLI::PositiveNumber);
  count_cmd
      ->add_option("--method", method,
                   "formula (even boards), dp (profile DP), chains (index "
                   "chain DP)")
      ->check(CLI::IsMember({"formula", "dp", "chains"}));

  auto* strips_cmd =
      app.add_subcommand("strips", "Print the strip matrix of width m");
  strips_cmd->add_option("--m", m, "Strip width in 2x2 blocks")
      ->required()
      ->check(CLI::PositiveNumber);
  strips_cmd->add_option("--format", format, "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));

  auto* decode_cmd = app.add_subcommand(
      "decode", "Build the board encoded by row/column subsets");
  decode_cmd->add_option("--rows", rows, "Board rows (even)")
      ->required()
      ->check(CLI::PositiveNumber);
  decode_cmd->add_option("--cols", cols, "Board columns (even)")
      ->required()
      ->check(CLI::PositiveNumber);
  decode_cmd->add_option("--R", subset_rows, "Row subset, comma separated")
      ->required()
      ->delimiter(',');
  decode_cmd->add_option("--C", subset_cols, "Column subset, comma separated")
      ->required()
      ->delimiter(',');
  decode_cmd->add_option("--format", format, "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));

  auto* encode_cmd = app.add_subcommand(
      "encode", "Read a board file and print its subset-pair JSON");
  encode_cmd->add_option("file", file, "Board file (JSON or ASCII), '-' for stdin")
      ->required();

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "List every maximum arrangement in canonical order");
  enumerate_cmd->add_option("--rows", rows, "Board rows")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--cols", cols, "Board columns")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--limit", limit,
                            "Stop after this many boards (-1 = all)");
  enumerate_cmd->add_option("--format", format, "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));

  auto* rank_cmd =
      app.add_subcommand("rank", "Print the rank of a maximum arrangement");
  rank_cmd->add_option("file", file, "Board file (JSON or ASCII), '-' for stdin")
      ->required();

  auto* unrank_cmd =
      app.add_subcommand("unrank", "Build the arrangement with a given rank");
  unrank_cmd->add_option("--index", index, "Rank in [0, count)")->required();
  unrank_cmd->add_option("--rows", rows, "Board rows (even)")
      ->required()
      ->check(CLI::PositiveNumber);
  unrank_cmd->add_option("--cols", cols, "Board columns (even)")
      ->required()
      ->check(CLI::PositiveNumber);
  unrank_cmd->add_option("--format", format, "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));

  auto* verify_cmd = app.add_subcommand(
      "verify", "Re-derive the structural identities up to a size bound");
  verify_cmd->add_option("--max-semi", max_semi,
                         "Check all boards with m+n up to this bound (2..8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*count_cmd) return run_count(rows, cols, method);
    if (*strips_cmd) return run_strips(m, format);
    if (*decode_cmd) return run_decode(rows, cols, subset_rows, subset_cols, format);
    if (*encode_cmd) return run_encode(file);
    if (*enumerate_cmd) return run_enumerate(rows, cols, limit, format);
    if (*rank_cmd) return run_rank(file);
    if (*unrank_cmd) return run_unrank(index, rows, cols, format);
    if (*verify_cmd) return run_verify(max_semi);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
