#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pawns/board.hpp"
#include "pawns/errors.hpp"

// Structure-free verification engines. Everything here works directly on the
// attack relation via row-by-row dynamic programming over pawn bitmasks; none
// of it knows about strips, square types, or subsets.

namespace pawns {

// Largest side length the profile DP accepts. Widths up to 16 would fit the
// mask type; 14 keeps every call interactive.
inline constexpr int kMaxOracleSide = 14;

// Enumeration refuses to materialize more boards than this.
inline constexpr long kEnumerationGuard = 10'000'000;

struct CountResult {
  int max_pawns = 0;
  mpz_class num_max_arrangements;
};

namespace detail {

// Backtracking/DP state: the previous row's pawn mask plus pawns placed so far.
struct ProfileState {
  std::uint32_t prev_mask = 0;
  int pawns = 0;
};

// Columns a pawn in `mask` attacks on an adjacent row.
inline std::uint32_t diag_reach(std::uint32_t mask, std::uint32_t full) {
  return ((mask << 1) | (mask >> 1)) & full;
}

inline void check_oracle_dims(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > kMaxOracleSide || cols > kMaxOracleSide) {
    throw InvalidArgument("board dimensions must be within 1.." +
                          std::to_string(kMaxOracleSide) + ", got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
}

// In-place subset maximum: g[x] becomes max over all t subset of x of g[t].
inline void subset_max(std::vector<int>& g, int width) {
  for (int b = 0; b < width; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (x & bit) g[x] = std::max(g[x], g[x ^ bit]);
    }
  }
}

// (best, ways) pairs under the merge "keep the larger best, add ways on ties".
// ways == 0 marks the empty aggregate.
struct MaxCount {
  int best = 0;
  mpz_class ways;
};

inline void merge_into(MaxCount& into, const MaxCount& from) {
  if (from.ways == 0) return;
  if (into.ways == 0 || from.best > into.best) {
    into = from;
  } else if (from.best == into.best) {
    into.ways += from.ways;
  }
}

// suffix[r][pm] = most pawns placeable on rows r..rows when row r-1 holds pm.
// suffix[1][0] is the board's independence number.
inline std::vector<std::vector<int>> suffix_best_table(int rows, int cols) {
  const int w = cols;
  const std::uint32_t full = (1u << w) - 1;
  const std::size_t size = std::size_t{1} << w;
  std::vector<std::vector<int>> suffix(rows + 2, std::vector<int>(size, 0));
  std::vector<int> g(size);
  for (int r = rows; r >= 1; --r) {
    for (std::uint32_t t = 0; t < size; ++t) {
      g[t] = std::popcount(t) + suffix[r + 1][t];
    }
    subset_max(g, w);
    for (std::uint32_t pm = 0; pm < size; ++pm) {
      suffix[r][pm] = g[full & ~diag_reach(pm, full)];
    }
  }
  return suffix;
}

}  // namespace detail

// True maximum number of pawns with no two diagonally adjacent.
inline int max_pawn_count(int rows, int cols) {
  detail::check_oracle_dims(rows, cols);
  return detail::suffix_best_table(rows, cols)[1][0];
}

// Exact (maximum, number of maximum arrangements) via the profile DP.
// Row masks never conflict within a row, so the constraint couples only
// consecutive rows; the subset-sum transform keeps each row pass at
// O(width * 2^width) merges.
inline CountResult count_max_arrangements(int rows, int cols) {
  detail::check_oracle_dims(rows, cols);
  const int w = cols;
  const std::uint32_t full = (1u << w) - 1;
  const std::size_t size = std::size_t{1} << w;

  std::vector<detail::MaxCount> dp(size);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    dp[mask] = {std::popcount(mask), 1};
  }
  std::vector<detail::MaxCount> sos(size), ndp(size);
  for (int r = 2; r <= rows; ++r) {
    sos = dp;
    for (int b = 0; b < w; ++b) {
      const std::uint32_t bit = 1u << b;
      for (std::uint32_t x = 0; x < size; ++x) {
        if (x & bit) detail::merge_into(sos[x], sos[x ^ bit]);
      }
    }
    for (std::uint32_t t = 0; t < size; ++t) {
      ndp[t] = sos[full & ~detail::diag_reach(t, full)];
      ndp[t].best += std::popcount(t);
    }
    dp.swap(ndp);
  }

  detail::MaxCount total;
  for (const auto& entry : dp) detail::merge_into(total, entry);
  return {total.best, std::move(total.ways)};
}

// Every maximum independent placement exactly once, in lexicographic order of
// the row-mask sequence (row 1 most significant; bit 0 of a mask is column 1).
// A nonnegative `limit` truncates that order. Backtracks row by row, pruning
// with the exact suffix table, so only branches that complete to a maximum
// arrangement are ever expanded.
inline std::vector<Board> enumerate_max_arrangements(int rows, int cols,
                                                     long limit = -1) {
  detail::check_oracle_dims(rows, cols);
  const CountResult counted = count_max_arrangements(rows, cols);
  mpz_class effective = counted.num_max_arrangements;
  if (limit >= 0 && effective > limit) effective = limit;
  if (effective > kEnumerationGuard) {
    throw CountGuardExceeded("enumeration of " +
                             counted.num_max_arrangements.get_str() +
                             " boards exceeds the guard of " +
                             std::to_string(kEnumerationGuard));
  }

  const auto suffix = detail::suffix_best_table(rows, cols);
  const int target = suffix[1][0];
  const std::uint32_t full = (1u << cols) - 1;

  std::vector<Board> out;
  out.reserve(effective.get_ui());
  std::vector<std::uint32_t> masks(rows + 1, 0);

  auto emit = [&] {
    std::vector<Cell> cells;
    cells.reserve(target);
    for (int r = 1; r <= rows; ++r) {
      for (std::uint32_t m = masks[r]; m != 0; m &= m - 1) {
        cells.push_back({r, std::countr_zero(m) + 1});
      }
    }
    out.emplace_back(rows, cols, std::move(cells));
  };

  const long want = effective.get_si();
  auto dfs = [&](auto&& self, int r, detail::ProfileState state) -> void {
    if (static_cast<long>(out.size()) >= want) return;
    if (r > rows) {
      emit();
      return;
    }
    const std::uint32_t allowed = full & ~detail::diag_reach(state.prev_mask, full);
    // (t - allowed) & allowed walks the submasks of `allowed` in increasing order.
    std::uint32_t t = 0;
    while (true) {
      if (state.pawns + std::popcount(t) + suffix[r + 1][t] == target) {
        masks[r] = t;
        self(self, r + 1, {t, state.pawns + std::popcount(t)});
        if (static_cast<long>(out.size()) >= want) return;
      }
      if (t == allowed) break;
      t = (t - allowed) & allowed;
    }
  };
  dfs(dfs, 1, {0, 0});
  return out;
}

// Number of length-n sequences of positions in the (m+1) x (m+1) index grid
// that are nondecreasing in both coordinates, counted by dynamic programming
// over the dominance order (2D prefix sums per step).
inline mpz_class count_via_strip_chains(int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("n and m must be at least 1");
  const int side = m + 1;
  std::vector<mpz_class> cur(static_cast<std::size_t>(side) * side, 1);
  auto at = [side](std::vector<mpz_class>& v, int i, int j) -> mpz_class& {
    return v[static_cast<std::size_t>(i) * side + j];
  };
  for (int step = 2; step <= n; ++step) {
    std::vector<mpz_class> next(static_cast<std::size_t>(side) * side);
    for (int i = 0; i < side; ++i) {
      for (int j = 0; j < side; ++j) {
        mpz_class& v = at(next, i, j);
        v = at(cur, i, j);
        if (i > 0) v += at(next, i - 1, j);
        if (j > 0) v += at(next, i, j - 1);
        if (i > 0 && j > 0) v -= at(next, i - 1, j - 1);
      }
    }
    cur = std::move(next);
  }
  mpz_class total = 0;
  for (const mpz_class& v : cur) total += v;
  return total;
}

}  // namespace pawns
