#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qg/congruence.hpp"
#include "qg/softquasigroup.hpp"

namespace qg {

// left:  { x*h : h in subset }     right: { h*x : h in subset }
// Cardinality is preserved (translations are bijections).
SubsetMask translate_subset(const Quasigroup& q, const SubsetMask& subset, int x, Side side);

// Parameterwise translate of a soft quasigroup's values by x.
SoftSet coset_soft(const SoftQuasigroup& sq, int x, Side side);

// All coset soft sets, indexed by x in carrier order.
struct CosetFamily {
    Side side = Side::left;
    std::vector<SoftSet> members;
};

CosetFamily coset_family(const SoftQuasigroup& sq, Side side);

// Every value is a normal subquasigroup. Requires a soft quasigroup.
bool is_normal_soft(const SoftQuasigroup& sq);

// Quotient of the base by θ_{F(a)}, one entry per parameter. The same
// congruence serves both sides; the sides differ in which translates label
// the blocks, recorded in coset_to_block (distinct coset value -> block id,
// cosets ordered by least representative x).
struct QuotientEntry {
    std::string param;
    Partition congruence;
    Quasigroup quotient;
    std::vector<std::pair<SubsetMask, int>> coset_to_block;
    bool correspondence_bijective = false;  // coset_to_block well-defined + 1-1 + onto
    bool quotient_commutative = false;
    bool quotient_distributive = false;
};

struct QuotientFamily {
    Side side = Side::left;
    std::vector<QuotientEntry> entries;
};

// Requires every value normal; a non-normal value is refused naming its
// parameter.
QuotientFamily quotient_family(const SoftQuasigroup& sq, Side side);

// The full coset battery over a distributive base, each claim re-verified
// with concrete witnesses:
//   - every member of both coset families is again a soft quasigroup
//   - the source is isomorphic to every member, parameterwise, and the left
//     and right families are isomorphic to each other
//   - when the source is normal, so is every member
struct CosetTheoremReport {
    bool members_are_soft_quasigroups = false;
    bool members_isomorphic_to_source = false;
    bool families_isomorphic = false;
    bool source_is_normal = false;
    bool normality_preserved = false;  // vacuously true when source not normal
    std::vector<std::string> counterexamples;

    bool all_pass() const {
        return members_are_soft_quasigroups && members_isomorphic_to_source &&
               families_isomorphic && normality_preserved;
    }
};

CosetTheoremReport verify_coset_theorems(const SoftQuasigroup& sq);

}  // namespace qg
