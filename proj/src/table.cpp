#include "qg/table.hpp"

#include <sstream>

namespace qg {
namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

}  // namespace

int CayleyTable::symbol_index(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == symbol) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> CayleyTable::default_symbols(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

CayleyTable parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    CayleyTable table;
    bool have_header = false;
    int rows_seen = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokens_of(line);

        if (!have_header) {
            table.n = static_cast<int>(toks.size());
            for (const auto& s : toks) {
                if (table.symbol_index(s) >= 0)
                    throw ParseError(line_no, "duplicate symbol declaration '" + s + "'");
                table.symbols.push_back(s);
            }
            if (table.n < 1) throw ParseError(line_no, "empty symbol declaration");
            if (table.n > 64)
                throw ParseError(line_no, "carrier larger than 64 symbols is not supported");
            have_header = true;
            continue;
        }

        if (rows_seen == table.n)
            throw ParseError(line_no, "unexpected extra row (table already has " +
                                          std::to_string(table.n) + " rows)");
        if (static_cast<int>(toks.size()) != table.n)
            throw ParseError(line_no, "ragged row: expected " + std::to_string(table.n) +
                                          " entries, got " + std::to_string(toks.size()));
        std::vector<int> row;
        row.reserve(table.n);
        for (const auto& s : toks) {
            int idx = table.symbol_index(s);
            if (idx < 0) throw ParseError(line_no, "unknown symbol '" + s + "'");
            row.push_back(idx);
        }
        table.cells.push_back(std::move(row));
        ++rows_seen;
    }

    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "no symbol declaration found");
    if (rows_seen != table.n)
        throw ParseError(line_no, "expected " + std::to_string(table.n) + " rows, got " +
                                      std::to_string(rows_seen));
    return table;
}

std::string emit_table(const CayleyTable& table) {
    std::string out;
    for (int i = 0; i < table.n; ++i) {
        if (i) out += ' ';
        out += table.symbols[i];
    }
    out += '\n';
    for (int r = 0; r < table.n; ++r) {
        for (int c = 0; c < table.n; ++c) {
            if (c) out += ' ';
            out += table.symbols[table.cells[r][c]];
        }
        out += '\n';
    }
    return out;
}

}  // namespace qg
