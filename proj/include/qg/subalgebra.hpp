#pragma once

#include <optional>
#include <vector>

#include "qg/quasigroup.hpp"
#include "qg/subset.hpp"

namespace qg {

// Closure and sub-structure predicates. Subsets are always required to be
// non-empty: soft-set values exclude the empty set, and every operation here
// serves that setting.

// true iff x (kind) y lands in `subset` for all x, y in `subset`.
bool is_closed(const Quasigroup& q, OpKind kind, const SubsetMask& subset);

// true iff `subset` is closed under mul, ldiv and rdiv; equivalently the
// induced sub-table is Latin.
bool is_subquasigroup(const Quasigroup& q, const SubsetMask& subset);

// Smallest superset of `seed` closed under mul, ldiv and rdiv.
SubsetMask closure(const Quasigroup& q, const SubsetMask& seed);

// All non-empty subquasigroups, sorted by (cardinality, mask bits).
// Direct subset scan for n <= 12; closure-of-seeds beyond. Refuses carriers
// larger than `bound`.
std::vector<SubsetMask> all_subquasigroups(const Quasigroup& q, int bound = 16);

// true iff `subset` (already a subquasigroup of q) is a subquasigroup of
// all six operations derived from q.
bool check_parastrophe_invariance(const Quasigroup& q, const SubsetMask& subset);

// The four subset criteria that coincide over a group base. Computed
// independently of each other; all_equal() is the theorem under test.
struct GroupSubsetCriteria {
    bool is_subloop = false;
    bool is_subgroup = false;
    bool rdiv_closed = false;
    bool ldiv_closed = false;

    bool all_equal() const {
        return is_subloop == is_subgroup && is_subgroup == rdiv_closed && rdiv_closed == ldiv_closed;
    }
};

// Refuses bases that are not group tables.
GroupSubsetCriteria group_criterion(const Quasigroup& q, const SubsetMask& subset);

// --- raw-table route -------------------------------------------------------
// These operate on unvalidated tables, where the full table may fail the
// Latin property while a restriction of it is still a perfectly good
// quasigroup.

// true iff all cells of subset x subset stay inside subset.
bool table_closed(const CayleyTable& table, const SubsetMask& subset);

// The restriction of `table` to `subset`, reindexed to 0..k-1 and keeping
// the original display symbols. Empty when the subset is not closed.
std::optional<CayleyTable> induced_table(const CayleyTable& table, const SubsetMask& subset);

// Closed and the induced table is Latin.
bool is_subquasigroup_of_table(const CayleyTable& table, const SubsetMask& subset);

// Validated restriction of a quasigroup to a subquasigroup.
Quasigroup induced_quasigroup(const Quasigroup& q, const SubsetMask& subset);

}  // namespace qg
