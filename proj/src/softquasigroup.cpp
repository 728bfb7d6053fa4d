#include "qg/softquasigroup.hpp"

#include <algorithm>
#include <set>

#include "qg/subalgebra.hpp"

namespace qg {
namespace {

void require_soft_quasigroup(const SoftQuasigroup& sq, const char* op) {
    if (!sq.is_soft_quasigroup())
        throw PreconditionError(std::string(op) + " requires a soft quasigroup");
}

AlgebraClass weakest(AlgebraClass a, AlgebraClass b) { return a < b ? a : b; }

}  // namespace

AlgebraClass ValueClassification::level() const {
    if (group) return AlgebraClass::group;
    if (loop) return AlgebraClass::loop;
    if (quasigroup) return AlgebraClass::quasigroup;
    if (groupoid) return AlgebraClass::groupoid;
    return AlgebraClass::none;
}

AlgebraClass base_class(const Quasigroup& base) {
    auto props = base.properties();
    if (props.is_group) return AlgebraClass::group;
    if (props.is_loop) return AlgebraClass::loop;
    return AlgebraClass::quasigroup;
}

SoftQuasigroup classify(const Quasigroup& base, SoftSet soft) {
    if (soft.universe != base.size())
        throw PreconditionError("soft set universe does not match carrier size");

    SoftQuasigroup sq{base, std::move(soft), {}, AlgebraClass::group, {}};
    AlgebraClass cap = base_class(base);

    for (int i = 0; i < sq.soft.param_count(); ++i) {
        const SubsetMask& value = sq.soft.values[i];
        ValueClassification vc;
        vc.groupoid = table_closed(base.table(), value);
        if (vc.groupoid) {
            auto sub = Quasigroup::check_latin(*induced_table(base.table(), value));
            vc.quasigroup = sub.empty();
            if (vc.quasigroup) {
                auto props = induced_quasigroup(base, value).properties();
                vc.loop = props.is_loop;
                vc.group = props.is_group;
            }
        } else {
            // first escaping cell, in (kind, x, y) scan order
            auto elems = value.members();
            bool found = false;
            for (OpKind kind : {OpKind::mul, OpKind::ldiv, OpKind::rdiv}) {
                for (int x : elems) {
                    for (int y : elems) {
                        int z = base.evaluate(kind, x, y);
                        if (!value.contains(z)) {
                            sq.counterexamples.push_back(
                                {sq.soft.params[i], kind, x, y, z});
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
        sq.per_param.push_back(vc);
        sq.overall = weakest(sq.overall, vc.level());
    }
    sq.overall = weakest(sq.overall, cap);
    return sq;
}

SoftQuasigroup soft_parastrophe(const SoftQuasigroup& sq, OpKind kind) {
    require_soft_quasigroup(sq, "soft_parastrophe");
    if (kind == OpKind::mul) return sq;
    return classify(sq.base.parastrophe(kind), sq.soft);
}

bool verify_six_equivalences(const Quasigroup& base, const SoftSet& soft) {
    bool first = true;
    bool status = false;
    for (OpKind kind : all_op_kinds) {
        const Quasigroup derived = base.parastrophe(kind);
        bool all_sub = true;
        for (const auto& value : soft.values)
            if (!is_subquasigroup(derived, value)) {
                all_sub = false;
                break;
            }
        if (first) {
            status = all_sub;
            first = false;
        } else if (status != all_sub) {
            return false;
        }
    }
    return true;
}

bool soft_quasigroup_criterion(const Quasigroup& base, const SoftSet& soft) {
    if (soft.universe != base.size())
        throw PreconditionError("soft set universe does not match carrier size");
    for (OpKind kind : {OpKind::mul, OpKind::ldiv, OpKind::rdiv})
        for (const auto& value : soft.values)
            if (!is_closed(base, kind, value)) return false;
    return true;
}

SoftGroupCriteria soft_group_criterion(const Quasigroup& base, const SoftSet& soft) {
    if (!base.properties().is_group)
        throw PreconditionError("soft_group_criterion requires a group table");
    if (soft.universe != base.size())
        throw PreconditionError("soft set universe does not match carrier size");

    SoftGroupCriteria c{true, true, true, true};
    for (const auto& value : soft.values) {
        GroupSubsetCriteria sub = group_criterion(base, value);
        c.soft_group = c.soft_group && sub.is_subgroup;
        c.soft_loop = c.soft_loop && sub.is_subloop;
        c.rdiv_soft_groupoid = c.rdiv_soft_groupoid && sub.rdiv_closed;
        c.ldiv_soft_groupoid = c.ldiv_soft_groupoid && sub.ldiv_closed;
    }
    return c;
}

bool soft_subquasigroup_of(const SoftQuasigroup& f, const SoftQuasigroup& g) {
    if (!(f.base == g.base)) throw PreconditionError("soft quasigroups have different bases");
    for (int i = 0; i < f.soft.param_count(); ++i) {
        int j = g.soft.param_index(f.soft.params[i]);
        if (j < 0) return false;
        const SubsetMask& small = f.soft.values[i];
        const SubsetMask& big = g.soft.values[j];
        if (!small.subset_of(big)) return false;
        // remap into the quasigroup induced on the enclosing value
        Quasigroup host = induced_quasigroup(g.base, big);
        auto hosts = big.members();
        SubsetMask remapped(static_cast<int>(hosts.size()));
        for (std::size_t k = 0; k < hosts.size(); ++k)
            if (small.contains(hosts[k])) remapped.add(static_cast<int>(k));
        if (!is_subquasigroup(host, remapped)) return false;
    }
    return true;
}

Metrics metrics(const SoftQuasigroup& sq) {
    require_soft_quasigroup(sq, "metrics");
    Metrics m;
    m.gm.product = BigUint{1};
    m.gm.degree = static_cast<unsigned>(sq.soft.param_count());
    std::set<std::uint64_t> distinct_proper;
    for (int i = 0; i < sq.soft.param_count(); ++i) {
        const SubsetMask& value = sq.soft.values[i];
        const auto size = static_cast<std::uint64_t>(value.cardinality());
        m.order_raw += size;
        m.gm.product *= BigUint{size};
        if (!value.is_full()) distinct_proper.insert(value.bits());
    }
    for (std::uint64_t bits : distinct_proper)
        m.order_distinct_proper +=
            static_cast<std::uint64_t>(SubsetMask(sq.soft.universe, bits).cardinality());
    m.am = Rational::make(static_cast<std::int64_t>(m.order_raw), sq.soft.param_count());
    return m;
}

bool parastrophe_metric_equality(const SoftQuasigroup& sq) {
    require_soft_quasigroup(sq, "parastrophe_metric_equality");
    const Metrics reference = metrics(sq);
    for (OpKind kind : all_op_kinds) {
        if (kind == OpKind::mul) continue;
        if (!(metrics(soft_parastrophe(sq, kind)) == reference)) return false;
    }
    return true;
}

DistributiveSoftReport is_distributive_soft(const SoftQuasigroup& sq) {
    require_soft_quasigroup(sq, "is_distributive_soft");
    DistributiveSoftReport r;
    r.distributive = sq.base.properties().is_distributive();
    if (!r.distributive) return r;

    r.parastrophes_distributive = true;
    r.parastrophes_idempotent = true;
    r.parastrophes_flexible = true;
    for (OpKind kind : all_op_kinds) {
        auto props = sq.base.parastrophe(kind).properties();
        r.parastrophes_distributive = r.parastrophes_distributive && props.is_distributive();
        r.parastrophes_idempotent = r.parastrophes_idempotent && props.is_idempotent;
        r.parastrophes_flexible = r.parastrophes_flexible && props.is_flexible;
    }
    return r;
}

NuclearStatus nuclear_check(const SoftQuasigroup& sq) {
    Nuclei nuclei = sq.base.nuclei();
    NuclearStatus status;
    for (const auto& value : sq.soft.values) {
        if (value == nuclei.left) status.is_left_nuclear = true;
        if (value == nuclei.right) status.is_right_nuclear = true;
    }
    return status;
}

}  // namespace qg
