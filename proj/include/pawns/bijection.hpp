#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pawns/board.hpp"
#include "pawns/errors.hpp"
#include "pawns/strip_matrix.hpp"

// The codec between subset pairs and maximum arrangements. A 2n x 2m board
// splits into n strips of width m; the strip-matrix indices of those strips,
// shifted by (i-1) per position, give a pair of n-subsets of [1, m+n]. Both
// directions below, plus an integer rank/unrank on top of subset ranks.

namespace pawns {

// An n-subset of rows and an n-subset of columns of [1, m+n], each strictly
// increasing, describing one maximum arrangement on a 2n x 2m board.
class SubsetPair {
 public:
  SubsetPair(int n, int m, std::vector<int> rows, std::vector<int> cols)
      : n_(n), m_(m), rows_(std::move(rows)), cols_(std::move(cols)) {
    if (n_ < 1 || m_ < 1) {
      throw InvalidArgument("n and m must be at least 1");
    }
    check_subset(rows_, "R");
    check_subset(cols_, "C");
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }

  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;

 private:
  void check_subset(std::vector<int>& subset, const char* name) {
    if (static_cast<int>(subset.size()) != n_) {
      throw InvalidArgument(std::string(name) + " has " +
                            std::to_string(subset.size()) +
                            " elements, expected n = " + std::to_string(n_));
    }
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < 1 || subset[i] > m_ + n_) {
        throw InvalidArgument(std::string(name) + " element " +
                              std::to_string(subset[i]) + " outside [1, " +
                              std::to_string(m_ + n_) + "]");
      }
      if (i > 0 && subset[i] == subset[i - 1]) {
        throw InvalidArgument(std::string(name) + " element " +
                              std::to_string(subset[i]) + " listed twice");
      }
    }
  }

  int n_;
  int m_;
  std::vector<int> rows_;
  std::vector<int> cols_;
};

// n strip-matrix index pairs (a_i, b_i), each coordinate in [1, m+1] and
// nondecreasing in i. The i-th pair names the strip at rows 2i-1, 2i.
class IndexSeq {
 public:
  IndexSeq(int m, std::vector<std::pair<int, int>> pairs)
      : m_(m), pairs_(std::move(pairs)) {
    if (m_ < 1) throw InvalidArgument("m must be at least 1");
    if (pairs_.empty()) throw InvalidArgument("index sequence must be nonempty");
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto [a, b] = pairs_[i];
      if (a < 1 || a > m_ + 1 || b < 1 || b > m_ + 1) {
        throw InvalidArgument("index pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ") outside [1, " +
                              std::to_string(m_ + 1) + "]^2");
      }
      if (i > 0 && (a < pairs_[i - 1].first || b < pairs_[i - 1].second)) {
        throw InvalidArgument("index pairs must be nondecreasing in both "
                              "coordinates");
      }
    }
  }

  int n() const { return static_cast<int>(pairs_.size()); }
  int m() const { return m_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  friend bool operator==(const IndexSeq&, const IndexSeq&) = default;

 private:
  int m_;
  std::vector<std::pair<int, int>> pairs_;
};

// (a_i, b_i) = (r_i - i + 1, c_i - i + 1). Strict increase of the subsets
// makes the result nondecreasing with coordinates in [1, m+1].
inline IndexSeq subsets_to_index_seq(const SubsetPair& p) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(p.n());
  for (int i = 1; i <= p.n(); ++i) {
    pairs.emplace_back(p.rows()[i - 1] - i + 1, p.cols()[i - 1] - i + 1);
  }
  return IndexSeq(p.m(), std::move(pairs));
}

// Exact inverse shift: r_i = a_i + i - 1, c_i = b_i + i - 1.
inline SubsetPair index_seq_to_subsets(const IndexSeq& s) {
  std::vector<int> rows, cols;
  rows.reserve(s.n());
  cols.reserve(s.n());
  for (int i = 1; i <= s.n(); ++i) {
    rows.push_back(s.pairs()[i - 1].first + i - 1);
    cols.push_back(s.pairs()[i - 1].second + i - 1);
  }
  return SubsetPair(s.n(), s.m(), std::move(rows), std::move(cols));
}

// Subsets -> board: concatenate the strips named by the index sequence, strip
// i occupying rows 2i-1 and 2i. The result is independent with 2mn pawns.
inline Board decode(const SubsetPair& p) {
  const IndexSeq seq = subsets_to_index_seq(p);
  std::vector<Cell> cells;
  cells.reserve(2 * static_cast<std::size_t>(p.n()) * p.m());
  for (int i = 0; i < p.n(); ++i) {
    const auto [a, b] = seq.pairs()[i];
    const Board strip_board = strip_to_board(strip_entry(p.m(), a, b));
    for (const Cell c : strip_board.pawns()) {
      cells.push_back({c.row + 2 * i, c.col});
    }
  }
  return Board(2 * p.n(), 2 * p.m(), std::move(cells));
}

// Board -> subsets: split into strips, read each strip's matrix position,
// undo the index shift. Fails with OddDimensions or NotMaximumIndependent on
// boards outside the codec's domain; a nonmonotone index sequence cannot
// happen for an independent maximum board and raises std::logic_error.
inline SubsetPair encode(const Board& b) {
  if (b.rows() % 2 != 0 || b.cols() % 2 != 0) {
    throw OddDimensions("odd dimensions: " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()) +
                        " board does not split into 2x2 blocks");
  }
  const int n = b.rows() / 2;
  const int m = b.cols() / 2;
  const auto conflicts = violations(b);
  if (!conflicts.empty()) {
    const auto [p, q] = conflicts.front();
    throw NotMaximumIndependent(
        "not independent: pawns (" + std::to_string(p.row) + "," +
        std::to_string(p.col) + ") and (" + std::to_string(q.row) + "," +
        std::to_string(q.col) + ") attack each other");
  }

  std::vector<std::vector<Cell>> slices(n);
  for (const Cell c : b.pawns()) {
    const int i = (c.row - 1) / 2;
    slices[i].push_back({c.row - 2 * i, c.col});
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto word = detail::decompose_strip_cells(slices[i], m);
    if (!word) {
      throw NotMaximumIndependent(
          "not a maximum arrangement: rows " + std::to_string(2 * i + 1) +
          "-" + std::to_string(2 * i + 2) +
          " do not form a full strip of 2x2 square types");
    }
    const auto located = detail::locate_word(*word);
    if (!located) {
      throw NotMaximumIndependent("not a maximum arrangement: strip " +
                                  Strip(*word).str() +
                                  " is not a strip-matrix entry");
    }
    pairs.push_back(*located);
  }
  for (int i = 1; i < n; ++i) {
    if (pairs[i].first < pairs[i - 1].first ||
        pairs[i].second < pairs[i - 1].second) {
      throw std::logic_error(
          "independent maximum board produced a nonmonotone index sequence");
    }
  }
  return index_seq_to_subsets(IndexSeq(m, std::move(pairs)));
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// C(m+n, n)^2, exact.
inline mpz_class arrangement_count(int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("n and m must be at least 1");
  const mpz_class c = binomial(static_cast<unsigned long>(n) + m,
                               static_cast<unsigned long>(n));
  return c * c;
}

namespace detail {

// Lexicographic rank of a sorted n-subset of [1, N] among all n-subsets.
inline mpz_class subset_rank_lex(const std::vector<int>& subset, int N) {
  const int n = static_cast<int>(subset.size());
  mpz_class rank = 0;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    for (int v = prev + 1; v < subset[i]; ++v) {
      rank += binomial(static_cast<unsigned long>(N - v),
                       static_cast<unsigned long>(n - 1 - i));
    }
    prev = subset[i];
  }
  return rank;
}

inline std::vector<int> subset_unrank_lex(mpz_class k, int N, int n) {
  std::vector<int> subset;
  subset.reserve(n);
  int v = 1;
  for (int i = 0; i < n; ++i) {
    while (true) {
      if (v > N) {
        throw std::logic_error("subset unrank ran past the ground set");
      }
      const mpz_class c = binomial(static_cast<unsigned long>(N - v),
                                   static_cast<unsigned long>(n - 1 - i));
      if (k < c) break;
      k -= c;
      ++v;
    }
    subset.push_back(v);
    ++v;
  }
  return subset;
}

}  // namespace detail

// Rank of the board under the row-major lexicographic subset order:
// rank = rank(R) * C(m+n, n) + rank(C). Inverse below.
inline mpz_class rank(const Board& b) {
  const SubsetPair p = encode(b);
  const int N = p.n() + p.m();
  const mpz_class per_row = binomial(static_cast<unsigned long>(N),
                                     static_cast<unsigned long>(p.n()));
  return detail::subset_rank_lex(p.rows(), N) * per_row +
         detail::subset_rank_lex(p.cols(), N);
}

inline Board unrank(const mpz_class& k, int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("n and m must be at least 1");
  if (k < 0 || k >= arrangement_count(n, m)) {
    throw InvalidArgument("rank " + k.get_str() + " outside [0, " +
                          arrangement_count(n, m).get_str() + ")");
  }
  const int N = n + m;
  const mpz_class per_row = binomial(static_cast<unsigned long>(N),
                                     static_cast<unsigned long>(n));
  const mpz_class row_rank = k / per_row;
  const mpz_class col_rank = k % per_row;
  return decode(SubsetPair(n, m,
                           detail::subset_unrank_lex(row_rank, N, n),
                           detail::subset_unrank_lex(col_rank, N, n)));
}

}  // namespace pawns
