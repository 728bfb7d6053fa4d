#include "qg/quasigroup.hpp"

#include <algorithm>
#include <numeric>

namespace qg {

bool Permutation::is_bijection() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= degree() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images.resize(images.size());
    for (int i = 0; i < degree(); ++i) inv.images[images[i]] = i;
    return inv;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(images.size(), false);
    std::vector<int> lengths;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

namespace {

std::string defect_message(const std::vector<LatinDefect>& defects) {
    std::string msg = "not a Latin square:";
    for (const auto& d : defects) {
        msg += (d.axis == Axis::row ? " row " : " column ") + std::to_string(d.index + 1) +
               " repeats '" + d.symbol + "', misses '" + d.missing_symbol + "';";
    }
    return msg;
}

void scan_line(const CayleyTable& t, Axis axis, int index, std::vector<LatinDefect>& out) {
    const int n = t.n;
    std::vector<std::vector<int>> positions(n);
    for (int k = 0; k < n; ++k) {
        int v = axis == Axis::row ? t.cells[index][k] : t.cells[k][index];
        positions[v].push_back(k);
    }
    std::vector<int> duplicated, missing;
    for (int v = 0; v < n; ++v) {
        if (positions[v].size() > 1) duplicated.push_back(v);
        if (positions[v].empty()) missing.push_back(v);
    }
    // counts balance, so the two lists pair off in carrier order
    for (std::size_t i = 0; i < duplicated.size(); ++i) {
        LatinDefect d;
        d.axis = axis;
        d.index = index;
        d.symbol = t.symbols[duplicated[i]];
        d.positions = positions[duplicated[i]];
        d.missing_symbol = i < missing.size() ? t.symbols[missing[i]] : "";
        out.push_back(std::move(d));
    }
}

}  // namespace

LatinError::LatinError(std::vector<LatinDefect> defects_)
    : Error(defect_message(defects_)), defects(std::move(defects_)) {}

std::vector<LatinDefect> Quasigroup::check_latin(const CayleyTable& table) {
    std::vector<LatinDefect> defects;
    if (static_cast<int>(table.cells.size()) != table.n)
        throw PreconditionError("table has wrong row count");
    for (const auto& row : table.cells)
        if (static_cast<int>(row.size()) != table.n)
            throw PreconditionError("table has a ragged row");
    for (int i = 0; i < table.n; ++i) scan_line(table, Axis::row, i, defects);
    for (int i = 0; i < table.n; ++i) scan_line(table, Axis::column, i, defects);
    return defects;
}

Quasigroup Quasigroup::validate(CayleyTable table, OpKind op_kind) {
    auto defects = check_latin(table);
    if (!defects.empty()) throw LatinError(std::move(defects));
    return Quasigroup(std::move(table), op_kind);
}

Quasigroup::Quasigroup(CayleyTable table, OpKind op_kind)
    : table_(std::move(table)), op_kind_(op_kind) {
    const int n = table_.n;
    ldiv_.assign(n, std::vector<int>(n));
    rdiv_.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int p = table_.cells[x][y];
            ldiv_[x][p] = y;  // x * y = p  =>  x \ p = y
            rdiv_[p][y] = x;  //             =>  p / y = x
        }
}

int Quasigroup::evaluate(OpKind kind, int x, int y) const {
    switch (kind) {
        case OpKind::mul: return mul(x, y);
        case OpKind::opp: return mul(y, x);
        case OpKind::rdiv: return rdiv(x, y);
        case OpKind::ldiv: return ldiv(x, y);
        case OpKind::ordiv: return rdiv(y, x);
        case OpKind::oldiv: return ldiv(y, x);
    }
    throw PreconditionError("bad operation kind");
}

Permutation Quasigroup::translation(int x, Side side) const {
    if (x < 0 || x >= size()) throw PreconditionError("element outside carrier");
    Permutation p;
    p.images.resize(size());
    for (int y = 0; y < size(); ++y)
        p.images[y] = side == Side::left ? mul(x, y) : mul(y, x);
    return p;
}

Quasigroup Quasigroup::parastrophe(OpKind kind) const {
    if (kind == OpKind::mul) return *this;
    CayleyTable t;
    t.n = size();
    t.symbols = table_.symbols;
    t.cells.assign(t.n, std::vector<int>(t.n));
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y) t.cells[x][y] = evaluate(kind, x, y);
    return validate(std::move(t), compose(kind, op_kind_));
}

PropertyReport Quasigroup::properties() const {
    const int n = size();
    PropertyReport r;

    for (int e = 0; e < n && !r.is_loop; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            r.is_loop = true;
            r.identity = e;
        }
    }

    r.is_commutative = true;
    for (int x = 0; x < n && r.is_commutative; ++x)
        for (int y = 0; y < n && r.is_commutative; ++y)
            r.is_commutative = mul(x, y) == mul(y, x);

    r.is_idempotent = true;
    for (int x = 0; x < n && r.is_idempotent; ++x) r.is_idempotent = mul(x, x) == x;

    r.is_flexible = true;
    for (int x = 0; x < n && r.is_flexible; ++x)
        for (int y = 0; y < n && r.is_flexible; ++y)
            r.is_flexible = mul(x, mul(y, x)) == mul(mul(x, y), x);

    bool associative = true;
    r.is_left_distributive = true;
    r.is_right_distributive = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) associative = false;
                if (mul(x, mul(y, z)) != mul(mul(x, y), mul(x, z))) r.is_left_distributive = false;
                if (mul(mul(y, z), x) != mul(mul(y, x), mul(z, x)))
                    r.is_right_distributive = false;
            }
    r.is_group = r.is_loop && associative;
    return r;
}

Nuclei Quasigroup::nuclei() const {
    const int n = size();
    SubsetMask left(n), right(n);
    for (int a = 0; a < n; ++a) {
        bool in_left = true, in_right = true;
        for (int x = 0; x < n && (in_left || in_right); ++x)
            for (int y = 0; y < n && (in_left || in_right); ++y) {
                if (in_left && mul(a, mul(x, y)) != mul(mul(a, x), y)) in_left = false;
                if (in_right && mul(mul(x, y), a) != mul(x, mul(y, a))) in_right = false;
            }
        if (in_left) left.add(a);
        if (in_right) right.add(a);
    }
    return Nuclei{left, right};
}

}  // namespace qg
