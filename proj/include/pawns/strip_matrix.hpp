#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pawns/board.hpp"
#include "pawns/errors.hpp"
#include "pawns/oracle.hpp"

namespace pawns {

// The four ways to place two nonattacking pawns on a 2x2 block:
// A fills the top row, B the right column, C the bottom row, D the left column.
enum class SquareType : unsigned char { A, B, C, D };

inline constexpr std::array<SquareType, 4> kSquareTypes = {
    SquareType::A, SquareType::B, SquareType::C, SquareType::D};

constexpr char to_char(SquareType t) {
  switch (t) {
    case SquareType::A: return 'A';
    case SquareType::B: return 'B';
    case SquareType::C: return 'C';
    case SquareType::D: return 'D';
  }
  return '?';
}

inline SquareType square_type_from_char(char c) {
  switch (c) {
    case 'A': return SquareType::A;
    case 'B': return SquareType::B;
    case 'C': return SquareType::C;
    case 'D': return SquareType::D;
  }
  throw ParseError(std::string("invalid square type '") + c +
                   "', expected one of A, B, C, D");
}

// Block-local pawn cells of a type, sorted row-major within the 2x2 square.
constexpr std::array<Cell, 2> square_cells(SquareType t) {
  switch (t) {
    case SquareType::A: return {{{1, 1}, {1, 2}}};
    case SquareType::B: return {{{1, 2}, {2, 2}}};
    case SquareType::C: return {{{2, 1}, {2, 2}}};
    case SquareType::D: return {{{1, 1}, {2, 1}}};
  }
  return {{{0, 0}, {0, 0}}};
}

// The generator map used to step one row down the strip matrix:
// A maps to D, everything else collapses to C. Its square is constantly C.
constexpr SquareType square_image(SquareType t) {
  return t == SquareType::A ? SquareType::D : SquareType::C;
}

// A width-m word of square types, read leftmost block first; block k of the
// corresponding 2 x 2m board occupies columns 2k-1 and 2k.
class Strip {
 public:
  explicit Strip(std::vector<SquareType> word) : word_(std::move(word)) {
    if (word_.empty()) throw InvalidArgument("strip width must be at least 1");
  }

  explicit Strip(std::string_view text) {
    if (text.empty()) throw InvalidArgument("strip width must be at least 1");
    word_.reserve(text.size());
    for (const char c : text) word_.push_back(square_type_from_char(c));
  }

  int width() const { return static_cast<int>(word_.size()); }
  const std::vector<SquareType>& word() const { return word_; }

  std::string str() const {
    std::string s;
    s.reserve(word_.size());
    for (const SquareType t : word_) s += to_char(t);
    return s;
  }

  friend auto operator<=>(const Strip&, const Strip&) = default;

 private:
  std::vector<SquareType> word_;
};

namespace detail {

inline void check_strip_index(int m, int index, const char* name) {
  if (index < 1 || index > m + 1) {
    throw InvalidArgument(std::string(name) + " = " + std::to_string(index) +
                          " outside [1, " + std::to_string(m + 1) + "]");
  }
}

}  // namespace detail

// Row-1 entry: the leftmost m+1-j blocks of type A, the remaining j-1 of type B.
inline Strip first_row_strip(int m, int j) {
  if (m < 1) throw InvalidArgument("strip width must be at least 1");
  detail::check_strip_index(m, j, "j");
  std::vector<SquareType> word(m, SquareType::A);
  for (int k = m + 1 - j; k < m; ++k) word[k] = SquareType::B;
  return Strip(std::move(word));
}

// Entry (i, j): the row-1 entry with its leftmost i-1 blocks replaced by their
// image under square_image, applied once, the rest left fixed.
inline Strip strip_entry(int m, int i, int j) {
  if (m < 1) throw InvalidArgument("strip width must be at least 1");
  detail::check_strip_index(m, i, "i");
  std::vector<SquareType> word = first_row_strip(m, j).word();
  for (int k = 0; k < i - 1 && k < m; ++k) word[k] = square_image(word[k]);
  return Strip(std::move(word));
}

// The (m+1) x (m+1) matrix of all maximum strips of width m, 1-indexed so that
// moving down or right only applies the A->D / B->C / A->B / D->C actions.
class StripMatrix {
 public:
  explicit StripMatrix(int m) : m_(m) {
    if (m < 1) throw InvalidArgument("strip width must be at least 1");
    entries_.reserve(static_cast<std::size_t>(m + 1) * (m + 1));
    for (int i = 1; i <= m + 1; ++i) {
      for (int j = 1; j <= m + 1; ++j) {
        entries_.push_back(strip_entry(m, i, j));
      }
    }
  }

  int m() const { return m_; }
  int side() const { return m_ + 1; }

  const Strip& entry(int i, int j) const {
    detail::check_strip_index(m_, i, "i");
    detail::check_strip_index(m_, j, "j");
    return entries_[static_cast<std::size_t>(i - 1) * (m_ + 1) + (j - 1)];
  }

  const std::vector<Strip>& entries() const { return entries_; }

 private:
  int m_;
  std::vector<Strip> entries_;
};

inline StripMatrix build_strip_matrix(int m) { return StripMatrix(m); }

// Expands a strip to its 2 x 2m board.
inline Board strip_to_board(const Strip& s) {
  std::vector<Cell> cells;
  cells.reserve(2 * s.width());
  for (int k = 0; k < s.width(); ++k) {
    for (const Cell c : square_cells(s.word()[k])) {
      cells.push_back({c.row, c.col + 2 * k});
    }
  }
  return Board(2, 2 * s.width(), std::move(cells));
}

// True iff `right` may sit immediately to the right of `left`:
// the two blocks side by side form an independent 2x4 board.
inline bool can_follow(SquareType left, SquareType right) {
  std::vector<Cell> cells;
  for (const Cell c : square_cells(left)) cells.push_back(c);
  for (const Cell c : square_cells(right)) cells.push_back({c.row, c.col + 2});
  return is_independent(Board(2, 4, std::move(cells)));
}

// True iff `top` may sit directly above `bottom` on a 4 x 2m board.
inline bool can_stack_strips(const Strip& top, const Strip& bottom) {
  if (top.width() != bottom.width()) {
    throw InvalidArgument("strip width mismatch: " + std::to_string(top.width()) +
                          " vs " + std::to_string(bottom.width()));
  }
  const Board top_board = strip_to_board(top);
  const Board bottom_board = strip_to_board(bottom);
  std::vector<Cell> cells;
  cells.reserve(4 * top.width());
  for (const Cell c : top_board.pawns()) cells.push_back(c);
  for (const Cell c : bottom_board.pawns()) cells.push_back({c.row + 2, c.col});
  return is_independent(Board(4, 2 * top.width(), std::move(cells)));
}

namespace detail {

// Reads a 2 x 2m pawn set (block-local rows 1..2) as a word of square types.
// Empty result means some 2x2 block is not one of the four patterns.
inline std::optional<std::vector<SquareType>> decompose_strip_cells(
    const std::vector<Cell>& cells, int m) {
  std::vector<std::vector<Cell>> blocks(m);
  for (const Cell c : cells) {
    const int k = (c.col - 1) / 2;
    if (c.row < 1 || c.row > 2 || k < 0 || k >= m) return std::nullopt;
    blocks[k].push_back({c.row, c.col - 2 * k});
  }
  std::vector<SquareType> word;
  word.reserve(m);
  for (auto& block : blocks) {
    if (block.size() != 2) return std::nullopt;
    std::sort(block.begin(), block.end());
    bool matched = false;
    for (const SquareType t : kSquareTypes) {
      const auto pattern = square_cells(t);
      if (block[0] == pattern[0] && block[1] == pattern[1]) {
        word.push_back(t);
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  return word;
}

}  // namespace detail

// All independent 2m-pawn placements on the 2 x 2m board, obtained from the
// raw attack model alone and read back as strips. Every maximum placement must
// decompose into 2x2 blocks of the four types; anything else would falsify the
// block geometry and raises std::logic_error.
inline std::set<Strip> enumerate_strips(int m) {
  if (m < 1) throw InvalidArgument("strip width must be at least 1");
  std::set<Strip> out;
  for (const Board& b : enumerate_max_arrangements(2, 2 * m)) {
    auto word = detail::decompose_strip_cells(b.pawns(), m);
    if (!word) {
      throw std::logic_error(
          "maximum 2x" + std::to_string(2 * m) +
          " placement does not decompose into the four square types");
    }
    out.insert(Strip(std::move(*word)));
  }
  return out;
}

namespace detail {

// Matrix position of a word, or nothing if the word is no entry. Entries are
// exactly the words of shape D^p A^q B^s or D^p C^r B^s, which pins (i, j)
// from the run lengths alone.
inline std::optional<std::pair<int, int>> locate_word(
    const std::vector<SquareType>& word) {
  const int m = static_cast<int>(word.size());
  int pos = 0;
  int leading_d = 0;
  while (pos < m && word[pos] == SquareType::D) {
    ++leading_d;
    ++pos;
  }
  int run_a = 0, run_c = 0;
  while (pos < m && word[pos] == SquareType::A) {
    ++run_a;
    ++pos;
  }
  if (run_a == 0) {
    while (pos < m && word[pos] == SquareType::C) {
      ++run_c;
      ++pos;
    }
  }
  int trailing_b = 0;
  while (pos < m && word[pos] == SquareType::B) {
    ++trailing_b;
    ++pos;
  }
  if (pos != m) return std::nullopt;
  if (run_c > 0) {
    return std::pair{m + 1 - trailing_b, m + 1 - leading_d};
  }
  return std::pair{leading_d + 1, trailing_b + 1};
}

}  // namespace detail

// Position of a strip in the matrix; by uniqueness there is at most one.
inline std::pair<int, int> locate_strip(const StripMatrix& matrix, const Strip& s) {
  if (s.width() != matrix.m()) {
    throw InvalidArgument("strip width " + std::to_string(s.width()) +
                          " does not match matrix width " +
                          std::to_string(matrix.m()));
  }
  const auto located = detail::locate_word(s.word());
  if (!located) {
    throw NotInMatrix("strip " + s.str() + " is not a strip-matrix entry");
  }
  return *located;
}

}  // namespace pawns
