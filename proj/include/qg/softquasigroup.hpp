#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qg/exact.hpp"
#include "qg/quasigroup.hpp"
#include "qg/softset.hpp"

namespace qg {

enum class AlgebraClass { none, groupoid, quasigroup, loop, group };

constexpr std::string_view to_string(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::none: return "none";
        case AlgebraClass::groupoid: return "groupoid";
        case AlgebraClass::quasigroup: return "quasigroup";
        case AlgebraClass::loop: return "loop";
        case AlgebraClass::group: return "group";
    }
    return "?";
}

// Structure of one soft value as a sub-table of the base: closed, Latin,
// has a two-sided identity, associative. Flags are cumulative facts about
// the induced table itself.
struct ValueClassification {
    bool groupoid = false;
    bool quasigroup = false;
    bool loop = false;
    bool group = false;

    AlgebraClass level() const;
};

// Where a classification fails, the first offending cell in scan order:
// parameter, operation, operands and the escaping product.
struct ClassificationCounterexample {
    std::string param;
    OpKind kind = OpKind::mul;
    int x = 0;
    int y = 0;
    int result = 0;
};

// A soft set classified against a validated base. `overall` is the weakest
// per-value level, additionally capped at the base's own class: a soft loop
// (group) only makes sense over a loop (group).
struct SoftQuasigroup {
    Quasigroup base;
    SoftSet soft;
    std::vector<ValueClassification> per_param;
    AlgebraClass overall = AlgebraClass::none;
    std::vector<ClassificationCounterexample> counterexamples;

    bool is_soft_groupoid() const { return overall >= AlgebraClass::groupoid; }
    bool is_soft_quasigroup() const { return overall >= AlgebraClass::quasigroup; }
};

AlgebraClass base_class(const Quasigroup& base);

// Refuses a universe-size mismatch.
SoftQuasigroup classify(const Quasigroup& base, SoftSet soft);

// Same soft set over base.parastrophe(kind), reclassified. Requires a soft
// quasigroup.
SoftQuasigroup soft_parastrophe(const SoftQuasigroup& sq, OpKind kind);

// Soft-quasigroup status is decided over all six operations derived from
// `base`; true iff the six verdicts coincide (all-yes or all-no).
bool verify_six_equivalences(const Quasigroup& base, const SoftSet& soft);

// true iff `soft` is simultaneously a soft groupoid under mul, ldiv and
// rdiv. Agrees with classify(...).is_soft_quasigroup() on every input.
bool soft_quasigroup_criterion(const Quasigroup& base, const SoftSet& soft);

// Computed independently; all_equal() is the theorem under test. Refuses
// non-group bases.
struct SoftGroupCriteria {
    bool soft_group = false;
    bool soft_loop = false;
    bool rdiv_soft_groupoid = false;
    bool ldiv_soft_groupoid = false;

    bool all_equal() const {
        return soft_group == soft_loop && soft_loop == rdiv_soft_groupoid &&
               rdiv_soft_groupoid == ldiv_soft_groupoid;
    }
};

SoftGroupCriteria soft_group_criterion(const Quasigroup& base, const SoftSet& soft);

// params(F) ⊆ params(G), and every F(a) is a subquasigroup of the
// quasigroup G induces on G(a). Both arguments must share one base.
bool soft_subquasigroup_of(const SoftQuasigroup& f, const SoftQuasigroup& g);

// order_raw        = Σ |F(a)| over all parameters
// order_distinct   = the same sum restricted to distinct proper values
//                    (full-carrier values and repeats dropped)
// am               = order_raw / |A|, exact
// gm               = (Π |F(a)|, |A|), exact pair
struct Metrics {
    std::uint64_t order_raw = 0;
    std::uint64_t order_distinct_proper = 0;
    Rational am;
    GeometricMean gm;

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

// Requires a soft quasigroup.
Metrics metrics(const SoftQuasigroup& sq);

// Exact equality of metrics across all six operations; requires a soft
// quasigroup.
bool parastrophe_metric_equality(const SoftQuasigroup& sq);

// `distributive` reflects the base; when set, the three corollary flags are
// re-verified directly on every derived operation rather than inherited.
struct DistributiveSoftReport {
    bool distributive = false;
    bool parastrophes_distributive = false;
    bool parastrophes_idempotent = false;
    bool parastrophes_flexible = false;
};

DistributiveSoftReport is_distributive_soft(const SoftQuasigroup& sq);

// Whether some value coincides with the base's left (right) nucleus. Over a
// distributive base with more than one element both nuclei are empty, so
// both flags must come back false there.
struct NuclearStatus {
    bool is_left_nuclear = false;
    bool is_right_nuclear = false;
};

NuclearStatus nuclear_check(const SoftQuasigroup& sq);

}  // namespace qg
