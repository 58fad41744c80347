#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pawns/errors.hpp"

namespace pawns {

// 1-based board coordinate; row 1 is the top row, column 1 the leftmost.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Two pawns attack exactly when they occupy diagonally adjacent cells.
// Symmetric and irreflexive; same-row and same-column neighbors never attack.
constexpr bool attacks(Cell p, Cell q) {
  const int dr = p.row - q.row;
  const int dc = p.col - q.col;
  return (dr == 1 || dr == -1) && (dc == 1 || dc == -1);
}

// A rows x cols board holding a set of pawns.
// Pawns are stored sorted row-major (the canonical order); two boards
// compare equal iff dimensions and pawn sets coincide.
class Board {
 public:
  Board(int rows, int cols) : Board(rows, cols, {}) {}

  Board(int rows, int cols, std::vector<Cell> pawns)
      : rows_(rows), cols_(cols), pawns_(std::move(pawns)) {
    if (rows_ < 1 || cols_ < 1) {
      throw InvalidArgument("board dimensions must be at least 1x1");
    }
    std::sort(pawns_.begin(), pawns_.end());
    for (std::size_t i = 0; i < pawns_.size(); ++i) {
      const Cell c = pawns_[i];
      if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_) {
        throw CellOutOfRange("cell (" + std::to_string(c.row) + "," +
                             std::to_string(c.col) + ") outside " +
                             std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " board");
      }
      if (i > 0 && pawns_[i - 1] == c) {
        throw DuplicateCell("cell (" + std::to_string(c.row) + "," +
                            std::to_string(c.col) + ") listed twice");
      }
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Sorted row-major.
  const std::vector<Cell>& pawns() const { return pawns_; }

  friend auto operator<=>(const Board&, const Board&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Cell> pawns_;
};

// All attacking pairs, each once, sorted row-major by first cell.
// Pawns are sorted by row, so only the current and next row can interact.
inline std::vector<std::pair<Cell, Cell>> violations(const Board& b) {
  std::vector<std::pair<Cell, Cell>> out;
  const auto& ps = b.pawns();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[j].row > ps[i].row + 1) break;
      if (attacks(ps[i], ps[j])) out.emplace_back(ps[i], ps[j]);
    }
  }
  return out;
}

inline bool is_independent(const Board& b) {
  const auto& ps = b.pawns();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[j].row > ps[i].row + 1) break;
      if (attacks(ps[i], ps[j])) return false;
    }
  }
  return true;
}

// Rows top to bottom, one line each, 'P' for pawn and '.' otherwise.
// No trailing spaces; the last line ends with a newline.
inline std::string render_ascii(const Board& b) {
  std::string out;
  out.reserve(static_cast<std::size_t>(b.rows()) * (b.cols() + 1));
  std::size_t next = 0;
  const auto& ps = b.pawns();
  for (int r = 1; r <= b.rows(); ++r) {
    for (int c = 1; c <= b.cols(); ++c) {
      if (next < ps.size() && ps[next].row == r && ps[next].col == c) {
        out += 'P';
        ++next;
      } else {
        out += '.';
      }
    }
    out += '\n';
  }
  return out;
}

// Inverse of render_ascii. Accepts any rectangular grid of 'P' and '.';
// a missing final newline is tolerated.
inline Board parse_ascii(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw ParseError("empty board text");
  const std::size_t width = lines.front().size();
  if (width == 0) throw ParseError("empty board row");
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != width) {
      throw ParseError("row " + std::to_string(r + 1) + " has length " +
                       std::to_string(lines[r].size()) + ", expected " +
                       std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      const char ch = lines[r][c];
      if (ch == 'P') {
        cells.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
      } else if (ch != '.') {
        throw ParseError(std::string("unexpected character '") + ch +
                         "' in board text");
      }
    }
  }
  return Board(static_cast<int>(lines.size()), static_cast<int>(width),
               std::move(cells));
}

inline Board transpose(const Board& b) {
  std::vector<Cell> cells;
  cells.reserve(b.pawns().size());
  for (const Cell c : b.pawns()) cells.push_back({c.col, c.row});
  return Board(b.cols(), b.rows(), std::move(cells));
}

}  // namespace pawns
