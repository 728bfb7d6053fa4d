#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qg/kinds.hpp"
#include "qg/subset.hpp"
#include "qg/table.hpp"

namespace qg {

struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int apply(int x) const { return images[x]; }
    bool is_bijection() const;
    Permutation inverse() const;
    // Sorted cycle lengths; conjugation-invariant.
    std::vector<int> cycle_type() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

enum class Axis { row, column };
enum class Side { left, right };

// One Latin-property violation: `symbol` occurs more than once on the given
// row/column (at 0-based `positions` along the other axis) while
// `missing_symbol` does not occur at all. Duplicated and missing symbols of
// a line are paired off in carrier order.
struct LatinDefect {
    Axis axis;
    int index;                   // 0-based row/column index
    std::string symbol;          // duplicated symbol
    std::vector<int> positions;  // where it occurs, ascending
    std::string missing_symbol;
};

struct LatinError : Error {
    std::vector<LatinDefect> defects;
    explicit LatinError(std::vector<LatinDefect> defects_);
};

struct PropertyReport {
    bool is_loop = false;
    std::optional<int> identity;  // set iff is_loop
    bool is_group = false;
    bool is_commutative = false;
    bool is_idempotent = false;
    bool is_flexible = false;
    bool is_left_distributive = false;
    bool is_right_distributive = false;

    bool is_distributive() const { return is_left_distributive && is_right_distributive; }
};

struct Nuclei {
    SubsetMask left;   // { a : a*(x*y) = (a*x)*y for all x, y }
    SubsetMask right;  // { a : (x*y)*a = x*(y*a) for all x, y }
};

// A Cayley table proven Latin: every row and every column is a permutation
// of the carrier, so both divisions are everywhere defined and unique.
// Immutable after construction; all member operations are pure.
class Quasigroup {
public:
    // All Latin-property defects of `table`, rows first then columns,
    // ascending index. Empty result means the table is a Latin square.
    static std::vector<LatinDefect> check_latin(const CayleyTable& table);

    // Throws LatinError carrying every defect (not just the first).
    static Quasigroup validate(CayleyTable table, OpKind op_kind = OpKind::mul);

    int size() const { return table_.n; }
    const CayleyTable& table() const { return table_; }
    const std::vector<std::string>& symbols() const { return table_.symbols; }
    OpKind op_kind() const { return op_kind_; }

    int mul(int x, int y) const { return table_.cells[x][y]; }
    int ldiv(int x, int y) const { return ldiv_[x][y]; }  // z with x*z = y
    int rdiv(int x, int y) const { return rdiv_[x][y]; }  // z with z*y = x
    int evaluate(OpKind kind, int x, int y) const;

    // left: y -> x*y (row x); right: y -> y*x (column x).
    Permutation translation(int x, Side side) const;

    // Full table of the requested operation, revalidated. The result's
    // op_kind composes with this table's own kind; parastrophe(mul) is the
    // identity derivation and returns *this unchanged.
    Quasigroup parastrophe(OpKind kind) const;

    // Every flag decided by exhaustive scan (pairs or triples).
    PropertyReport properties() const;

    Nuclei nuclei() const;

    friend bool operator==(const Quasigroup& a, const Quasigroup& b) {
        return a.table_ == b.table_;
    }

private:
    Quasigroup(CayleyTable table, OpKind op_kind);

    CayleyTable table_;
    OpKind op_kind_;
    std::vector<std::vector<int>> ldiv_;
    std::vector<std::vector<int>> rdiv_;
};

}  // namespace qg
