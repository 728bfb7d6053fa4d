#include "qg/subalgebra.hpp"

#include <algorithm>
#include <set>

namespace qg {
namespace {

void require_nonempty(const SubsetMask& subset) {
    if (subset.empty()) throw PreconditionError("empty subset rejected");
}

void require_same_universe(const Quasigroup& q, const SubsetMask& subset) {
    if (subset.universe() != q.size())
        throw PreconditionError("subset universe does not match carrier size");
}

}  // namespace

bool is_closed(const Quasigroup& q, OpKind kind, const SubsetMask& subset) {
    require_same_universe(q, subset);
    require_nonempty(subset);
    auto elems = subset.members();
    for (int x : elems)
        for (int y : elems)
            if (!subset.contains(q.evaluate(kind, x, y))) return false;
    return true;
}

bool is_subquasigroup(const Quasigroup& q, const SubsetMask& subset) {
    return is_closed(q, OpKind::mul, subset) && is_closed(q, OpKind::ldiv, subset) &&
           is_closed(q, OpKind::rdiv, subset);
}

SubsetMask closure(const Quasigroup& q, const SubsetMask& seed) {
    require_same_universe(q, seed);
    require_nonempty(seed);
    SubsetMask acc = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        auto elems = acc.members();
        for (int x : elems)
            for (int y : elems)
                for (OpKind kind : {OpKind::mul, OpKind::ldiv, OpKind::rdiv}) {
                    int z = q.evaluate(kind, x, y);
                    if (!acc.contains(z)) {
                        acc.add(z);
                        grew = true;
                    }
                }
    }
    return acc;
}

std::vector<SubsetMask> all_subquasigroups(const Quasigroup& q, int bound) {
    const int n = q.size();
    if (n > bound)
        throw BoundError("refusing to enumerate subquasigroups of a carrier of size " +
                         std::to_string(n) + " (bound " + std::to_string(bound) + ")");

    std::vector<SubsetMask> found;
    if (n <= 12) {
        // direct scan; doubles as the oracle for the seeded route
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t bits = 1; bits < limit; ++bits) {
            SubsetMask m(n, bits);
            if (is_subquasigroup(q, m)) found.push_back(m);
        }
    } else {
        // closures of grown seeds reach every subquasigroup
        std::set<std::uint64_t> seen;
        std::vector<SubsetMask> frontier;
        for (int x = 0; x < n; ++x) {
            SubsetMask c = closure(q, SubsetMask::single(n, x));
            if (seen.insert(c.bits()).second) frontier.push_back(c);
        }
        while (!frontier.empty()) {
            std::vector<SubsetMask> next;
            for (const auto& h : frontier) {
                for (int x = 0; x < n; ++x) {
                    if (h.contains(x)) continue;
                    SubsetMask grown = h;
                    grown.add(x);
                    SubsetMask c = closure(q, grown);
                    if (seen.insert(c.bits()).second) next.push_back(c);
                }
            }
            frontier = std::move(next);
        }
        for (std::uint64_t bits : seen) found.emplace_back(n, bits);
    }

    std::sort(found.begin(), found.end(), [](const SubsetMask& a, const SubsetMask& b) {
        if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
        return a.bits() < b.bits();
    });
    return found;
}

bool check_parastrophe_invariance(const Quasigroup& q, const SubsetMask& subset) {
    if (!is_subquasigroup(q, subset))
        throw PreconditionError("subset is not a subquasigroup of the base");
    for (OpKind kind : all_op_kinds) {
        if (!is_subquasigroup(q.parastrophe(kind), subset)) return false;
    }
    return true;
}

GroupSubsetCriteria group_criterion(const Quasigroup& q, const SubsetMask& subset) {
    require_same_universe(q, subset);
    require_nonempty(subset);
    if (!q.properties().is_group)
        throw PreconditionError("group_criterion requires a group table");

    GroupSubsetCriteria c;
    c.rdiv_closed = is_closed(q, OpKind::rdiv, subset);
    c.ldiv_closed = is_closed(q, OpKind::ldiv, subset);

    if (table_closed(q.table(), subset)) {
        auto sub = induced_table(q.table(), subset);
        if (Quasigroup::check_latin(*sub).empty()) {
            auto props = Quasigroup::validate(*sub).properties();
            c.is_subloop = props.is_loop;
            c.is_subgroup = props.is_group;
        }
    }
    return c;
}

bool table_closed(const CayleyTable& table, const SubsetMask& subset) {
    if (subset.universe() != table.n)
        throw PreconditionError("subset universe does not match table size");
    require_nonempty(subset);
    auto elems = subset.members();
    for (int x : elems)
        for (int y : elems)
            if (!subset.contains(table.cells[x][y])) return false;
    return true;
}

std::optional<CayleyTable> induced_table(const CayleyTable& table, const SubsetMask& subset) {
    if (!table_closed(table, subset)) return std::nullopt;
    auto elems = subset.members();
    const int k = static_cast<int>(elems.size());
    std::vector<int> reindex(table.n, -1);
    for (int i = 0; i < k; ++i) reindex[elems[i]] = i;

    CayleyTable sub;
    sub.n = k;
    for (int e : elems) sub.symbols.push_back(table.symbols[e]);
    sub.cells.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.cells[i][j] = reindex[table.cells[elems[i]][elems[j]]];
    return sub;
}

bool is_subquasigroup_of_table(const CayleyTable& table, const SubsetMask& subset) {
    auto sub = induced_table(table, subset);
    return sub && Quasigroup::check_latin(*sub).empty();
}

Quasigroup induced_quasigroup(const Quasigroup& q, const SubsetMask& subset) {
    auto sub = induced_table(q.table(), subset);
    if (!sub) throw PreconditionError("subset is not closed under the base operation");
    return Quasigroup::validate(std::move(*sub), q.op_kind());
}

}  // namespace qg
