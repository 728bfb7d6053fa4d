#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

// A raw n x n operation table over elements 0..n-1. Not necessarily a Latin
// square; validation lives in quasigroup.hpp.
struct CayleyTable {
    int n = 0;
    std::vector<std::string> symbols;       // n pairwise-distinct display symbols
    std::vector<std::vector<int>> cells;    // cells[row][col], each < n

    int cell(int row, int col) const { return cells[row][col]; }
    // -1 when the symbol is not declared.
    int symbol_index(std::string_view symbol) const;

    // 1-based decimal symbols "1".."n".
    static std::vector<std::string> default_symbols(int n);

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

// Table file format:
//   - lines whose first non-blank character is '#' are comments
//   - first non-comment line: the n display symbols (declaration order is
//     carrier order)
//   - next n non-comment lines: n symbols each; row i lists i*j for all j
// parse_table reports malformed lines, unknown symbols, ragged rows and
// duplicate declarations with their 1-based line number.
CayleyTable parse_table(std::string_view text);

// Canonical single-space rendering; parse_table(emit_table(t)) == t, and the
// symbol order and row contents of the source are reproduced exactly.
std::string emit_table(const CayleyTable& table);

}  // namespace qg
