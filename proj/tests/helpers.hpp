#pragma once

#include <bit>
#include <cassert>
#include <string>
#include <vector>

#include "pawns/board.hpp"
#include "pawns/strip_matrix.hpp"

// Test-only reference implementations, deliberately independent of the
// library's DP and strip machinery.

namespace testutil {

struct BruteResult {
  int max_pawns = 0;
  long num_max = 0;
};

// Exhaustive maximum/count over every subset of cells; usable up to 20 cells.
inline BruteResult brute_force_max(int rows, int cols) {
  const int n = rows * cols;
  assert(n <= 20);
  std::vector<unsigned> adjacent(n, 0);
  auto index = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (const int dr : {-1, 1}) {
        for (const int dc : {-1, 1}) {
          const int rr = r + dr, cc = c + dc;
          if (rr >= 0 && rr < rows && cc >= 0 && cc < cols) {
            adjacent[index(r, c)] |= 1u << index(rr, cc);
          }
        }
      }
    }
  }
  BruteResult result;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (int i = 0; i < n && independent; ++i) {
      if ((mask >> i & 1u) && (adjacent[i] & mask)) independent = false;
    }
    if (!independent) continue;
    const int pawns = std::popcount(mask);
    if (pawns > result.max_pawns) {
      result.max_pawns = pawns;
      result.num_max = 1;
    } else if (pawns == result.max_pawns) {
      ++result.num_max;
    }
  }
  return result;
}

// All n-subsets of [1, N] in ascending lexicographic order.
inline std::vector<std::vector<int>> all_subsets(int N, int n) {
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

// Board made of the given strip words stacked top to bottom.
inline pawns::Board stack_strip_words(const std::vector<std::string>& words) {
  assert(!words.empty());
  const int m = static_cast<int>(words.front().size());
  std::vector<pawns::Cell> cells;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const pawns::Board strip = pawns::strip_to_board(pawns::Strip(words[i]));
    for (const pawns::Cell c : strip.pawns()) {
      cells.push_back({c.row + 2 * static_cast<int>(i), c.col});
    }
  }
  return pawns::Board(2 * static_cast<int>(words.size()), 2 * m, cells);
}

// Row bitmasks of a board, bit 0 = column 1; the canonical enumeration key.
inline std::vector<unsigned> row_masks(const pawns::Board& b) {
  std::vector<unsigned> masks(b.rows(), 0);
  for (const pawns::Cell c : b.pawns()) {
    masks[c.row - 1] |= 1u << (c.col - 1);
  }
  return masks;
}

}  // namespace testutil
