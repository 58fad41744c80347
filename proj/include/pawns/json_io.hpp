#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pawns/bijection.hpp"
#include "pawns/board.hpp"
#include "pawns/errors.hpp"

// Canonical JSON forms. Field order is part of the output format, so emission
// goes through nlohmann::ordered_json; parsing accepts any field order.
//
//   board:   {"rows":R,"cols":C,"pawns":[[r,c],...]}   pawns row-major
//   subsets: {"n":n,"m":m,"R":[...],"C":[...]}          R, C ascending

namespace pawns {

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson parse_json(std::string_view text) {
  ojson parsed = ojson::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw ParseError("malformed JSON");
  }
  return parsed;
}

inline long get_int_field(const ojson& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  if (!obj[key].is_number_integer()) {
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  }
  return obj[key].get<long>();
}

inline std::vector<int> get_int_array(const ojson& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  const auto& arr = obj[key];
  if (!arr.is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<int> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("field \"") + key +
                       "\" must hold integers only");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace detail

inline std::string to_json(const Board& b) {
  detail::ojson out;
  out["rows"] = b.rows();
  out["cols"] = b.cols();
  auto pawns = detail::ojson::array();
  for (const Cell c : b.pawns()) {
    pawns.push_back(detail::ojson::array({c.row, c.col}));
  }
  out["pawns"] = std::move(pawns);
  return out.dump();
}

inline Board board_from_json(std::string_view text) {
  const detail::ojson parsed = detail::parse_json(text);
  const long rows = detail::get_int_field(parsed, "rows");
  const long cols = detail::get_int_field(parsed, "cols");
  if (!parsed.contains("pawns") || !parsed["pawns"].is_array()) {
    throw ParseError("missing field \"pawns\"");
  }
  std::vector<Cell> cells;
  cells.reserve(parsed["pawns"].size());
  for (const auto& entry : parsed["pawns"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw ParseError("each pawn must be a [row, col] integer pair");
    }
    cells.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  return Board(static_cast<int>(rows), static_cast<int>(cols), std::move(cells));
}

inline std::string to_json(const SubsetPair& p) {
  detail::ojson out;
  out["n"] = p.n();
  out["m"] = p.m();
  out["R"] = p.rows();
  out["C"] = p.cols();
  return out.dump();
}

inline SubsetPair subset_pair_from_json(std::string_view text) {
  const detail::ojson parsed = detail::parse_json(text);
  const long n = detail::get_int_field(parsed, "n");
  const long m = detail::get_int_field(parsed, "m");
  return SubsetPair(static_cast<int>(n), static_cast<int>(m),
                    detail::get_int_array(parsed, "R"),
                    detail::get_int_array(parsed, "C"));
}

}  // namespace pawns
