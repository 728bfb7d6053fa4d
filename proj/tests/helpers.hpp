#pragma once

// Shared test scaffolding: fixture loading, exhaustive enumerators and the
// brute-force oracles the unit and acceptance suites check the library
// against. Oracles are written directly on raw tables/vectors so they do not
// share code paths with the implementations they audit.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qg/quasigroup.hpp"
#include "qg/table.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(QG_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline qg::CayleyTable fixture_table(const std::string& name) {
    return qg::parse_table(read_file(fixture_path(name)));
}

inline qg::Quasigroup fixture_quasigroup(const std::string& name) {
    return qg::Quasigroup::validate(fixture_table(name));
}

inline std::string fixture_text(const std::string& name) {
    return read_file(fixture_path(name));
}

// Table from 0-based cell rows, default 1-based decimal symbols.
inline qg::CayleyTable make_table(const std::vector<std::vector<int>>& cells) {
    qg::CayleyTable t;
    t.n = static_cast<int>(cells.size());
    t.symbols = qg::CayleyTable::default_symbols(t.n);
    t.cells = cells;
    return t;
}

inline qg::Quasigroup cyclic_group(int n) {
    std::vector<std::vector<int>> cells(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cells[x][y] = (x + y) % n;
    return qg::Quasigroup::validate(make_table(cells));
}

// ---------------------------------------------------------------- enumerators

// Every n x n Latin square, emitted in lexicographic row order.
inline void for_each_latin_square(int n,
                                  const std::function<void(const qg::CayleyTable&)>& emit) {
    std::vector<std::vector<int>> cells(n, std::vector<int>(n, -1));
    std::vector<std::uint32_t> col_used(n, 0);
    std::uint32_t row_used = 0;

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == n) {
            emit(make_table(cells));
            return;
        }
        int nr = c + 1 == n ? r + 1 : r;
        int nc = c + 1 == n ? 0 : c + 1;
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = 1u << v;
            if ((row_used & bit) || (col_used[c] & bit)) continue;
            cells[r][c] = v;
            row_used |= bit;
            col_used[c] |= bit;
            std::uint32_t saved_row = row_used;
            if (nc == 0) row_used = 0;
            rec(nr, nc);
            row_used = saved_row;
            row_used &= ~bit;
            col_used[c] &= ~bit;
            cells[r][c] = -1;
        }
    };
    rec(0, 0);
}

// Uniformly seeded (not uniformly distributed) random Latin square via
// randomized backtracking.
inline qg::CayleyTable random_latin_square(int n, std::mt19937& rng) {
    std::vector<std::vector<int>> cells(n, std::vector<int>(n, -1));
    std::vector<std::uint32_t> col_used(n, 0), row_used(n, 0);

    std::function<bool(int, int)> rec = [&](int r, int c) {
        if (r == n) return true;
        int nr = c + 1 == n ? r + 1 : r;
        int nc = c + 1 == n ? 0 : c + 1;
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        for (int v : order) {
            std::uint32_t bit = 1u << v;
            if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
            cells[r][c] = v;
            row_used[r] |= bit;
            col_used[c] |= bit;
            if (rec(nr, nc)) return true;
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
            cells[r][c] = -1;
        }
        return false;
    };
    rec(0, 0);
    return make_table(cells);
}

// Every partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> block_of(n, 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            emit(block_of);
            return;
        }
        for (int b = 0; b <= max_used + 1 && b < n; ++b) {
            block_of[i] = b;
            rec(i + 1, std::max(max_used, b));
        }
    };
    rec(0, -1);
}

// -------------------------------------------------------------------- oracles

// Independent normal-congruence check on a raw block map.
inline bool brute_is_normal_congruence(const qg::CayleyTable& t, const std::vector<int>& block_of) {
    const int n = t.n;
    auto same = [&](int a, int b) { return block_of[a] == block_of[b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (same(t.cells[c][a], t.cells[c][b]) && !same(a, b)) return false;
                if (same(t.cells[a][c], t.cells[b][c]) && !same(a, b)) return false;
                for (int d = 0; d < n; ++d)
                    if (same(a, b) && same(c, d) && !same(t.cells[a][c], t.cells[b][d]))
                        return false;
            }
    return true;
}

// Independent subquasigroup check: closed and the restricted table is a
// Latin square (counting occurrences directly).
inline bool brute_is_subquasigroup(const qg::CayleyTable& t, const std::vector<int>& members) {
    const int k = static_cast<int>(members.size());
    if (k == 0) return false;
    std::vector<int> pos(t.n, -1);
    for (int i = 0; i < k; ++i) pos[members[i]] = i;
    std::vector<std::vector<int>> row_count(k, std::vector<int>(k, 0));
    std::vector<std::vector<int>> col_count(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int v = t.cells[members[i]][members[j]];
            if (pos[v] < 0) return false;
            ++row_count[i][pos[v]];
            ++col_count[j][pos[v]];
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (row_count[i][j] != 1 || col_count[i][j] != 1) return false;
    return true;
}

inline std::vector<int> mask_members(std::uint64_t bits, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if ((bits >> i) & 1u) out.push_back(i);
    return out;
}

}  // namespace testutil
