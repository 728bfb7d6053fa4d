#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qg/subset.hpp"
#include "qg/table.hpp"

namespace qg {

// A finite family of named non-empty subsets of a universe {0..n-1}.
// Parameter order is the file/declaration order; comparisons never depend
// on it.
struct SoftSet {
    int universe = 0;
    std::vector<std::string> params;   // pairwise distinct
    std::vector<SubsetMask> values;    // parallel to params, all non-empty

    int param_count() const { return static_cast<int>(params.size()); }
    // -1 when absent.
    int param_index(std::string_view name) const;
    const SubsetMask& value(int i) const { return values[i]; }
};

// Soft-set file format: '#' comment lines; every other non-blank line is
//   <param>: <symbol> <symbol> ...
// with symbols drawn from `table`. Duplicate parameters and empty value
// lists are rejected with their line number.
SoftSet parse_softset(std::string_view text, const CayleyTable& table);
std::string emit_softset(const SoftSet& soft, const CayleyTable& table);

// params(F) included in params(G) and F(a) ⊆ G(a) for every parameter of F.
bool soft_subset(const SoftSet& f, const SoftSet& g);

// soft_subset both ways: same parameter set (any order), identical values.
bool soft_equal(const SoftSet& f, const SoftSet& g);

struct SoftSetOpResult {
    SoftSet set;
    // Shared parameters whose value intersection was empty, dropped to keep
    // the non-empty-value invariant.
    std::vector<std::string> dropped;
};

// Parameters = A ∩ B (in F's order), value = F(c) ∩ G(c). Refuses disjoint
// parameter sets and all-empty results. With strict = true any empty
// intersection aborts the whole operation instead of being dropped.
SoftSetOpResult restricted_intersection(const SoftSet& f, const SoftSet& g, bool strict = false);

// Parameters = A ∪ B (F's order, then G's new ones); F alone / G alone keep
// their value, shared parameters intersect (empty ones dropped as above).
SoftSetOpResult extended_intersection(const SoftSet& f, const SoftSet& g, bool strict = false);

// Parameters = A ∪ B; shared parameters take the union of both values.
SoftSet extended_union(const SoftSet& f, const SoftSet& g);

}  // namespace qg
