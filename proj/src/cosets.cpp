#include "qg/cosets.hpp"

#include <algorithm>

#include "qg/iso.hpp"
#include "qg/subalgebra.hpp"

namespace qg {
namespace {

void require_soft_quasigroup(const SoftQuasigroup& sq, const char* op) {
    if (!sq.is_soft_quasigroup())
        throw PreconditionError(std::string(op) + " requires a soft quasigroup");
}

}  // namespace

SubsetMask translate_subset(const Quasigroup& q, const SubsetMask& subset, int x, Side side) {
    if (subset.universe() != q.size())
        throw PreconditionError("subset universe does not match carrier size");
    if (subset.empty()) throw PreconditionError("empty subset rejected");
    if (x < 0 || x >= q.size()) throw PreconditionError("element outside carrier");
    SubsetMask out(q.size());
    for (int h : subset.members()) out.add(side == Side::left ? q.mul(x, h) : q.mul(h, x));
    return out;
}

SoftSet coset_soft(const SoftQuasigroup& sq, int x, Side side) {
    require_soft_quasigroup(sq, "coset_soft");
    SoftSet out;
    out.universe = sq.soft.universe;
    out.params = sq.soft.params;
    for (const auto& value : sq.soft.values)
        out.values.push_back(translate_subset(sq.base, value, x, side));
    return out;
}

CosetFamily coset_family(const SoftQuasigroup& sq, Side side) {
    require_soft_quasigroup(sq, "coset_family");
    CosetFamily family;
    family.side = side;
    for (int x = 0; x < sq.base.size(); ++x) family.members.push_back(coset_soft(sq, x, side));
    return family;
}

bool is_normal_soft(const SoftQuasigroup& sq) {
    require_soft_quasigroup(sq, "is_normal_soft");
    for (const auto& value : sq.soft.values)
        if (!is_normal_subquasigroup(sq.base, value)) return false;
    return true;
}

QuotientFamily quotient_family(const SoftQuasigroup& sq, Side side) {
    require_soft_quasigroup(sq, "quotient_family");
    QuotientFamily family;
    family.side = side;

    for (int i = 0; i < sq.soft.param_count(); ++i) {
        const SubsetMask& value = sq.soft.values[i];
        auto theta = is_normal_subquasigroup(sq.base, value);
        if (!theta)
            throw PreconditionError("value of parameter '" + sq.soft.params[i] +
                                    "' is not a normal subquasigroup");

        QuotientEntry entry{sq.soft.params[i], *theta, quotient(sq.base, *theta),
                            {},               false,  false,
                            false};

        // distinct translates of the value, labelled by block-of-translator
        std::vector<std::pair<SubsetMask, int>> mapping;
        bool well_defined = true;
        for (int x = 0; x < sq.base.size(); ++x) {
            SubsetMask coset = translate_subset(sq.base, value, x, side);
            int block = theta->block_of[x];
            auto it = std::find_if(mapping.begin(), mapping.end(),
                                   [&](const auto& p) { return p.first == coset; });
            if (it == mapping.end())
                mapping.emplace_back(coset, block);
            else if (it->second != block)
                well_defined = false;
        }
        bool injective = true;
        for (std::size_t a = 0; a < mapping.size(); ++a)
            for (std::size_t b = a + 1; b < mapping.size(); ++b)
                if (mapping[a].second == mapping[b].second) injective = false;
        bool onto = static_cast<int>(mapping.size()) == theta->block_count;
        entry.coset_to_block = std::move(mapping);
        entry.correspondence_bijective = well_defined && injective && onto;

        auto props = entry.quotient.properties();
        entry.quotient_commutative = props.is_commutative;
        entry.quotient_distributive = props.is_distributive();

        family.entries.push_back(std::move(entry));
    }
    return family;
}

CosetTheoremReport verify_coset_theorems(const SoftQuasigroup& sq) {
    require_soft_quasigroup(sq, "verify_coset_theorems");
    if (!sq.base.properties().is_distributive())
        throw PreconditionError("verify_coset_theorems requires a distributive base");

    CosetTheoremReport report;
    report.members_are_soft_quasigroups = true;
    report.members_isomorphic_to_source = true;
    report.families_isomorphic = true;

    const auto& symbols = sq.base.symbols();
    auto note = [&](std::string text) { report.counterexamples.push_back(std::move(text)); };

    for (int x = 0; x < sq.base.size(); ++x) {
        for (int i = 0; i < sq.soft.param_count(); ++i) {
            const SubsetMask& value = sq.soft.values[i];
            const SubsetMask left = translate_subset(sq.base, value, x, Side::left);
            const SubsetMask right = translate_subset(sq.base, value, x, Side::right);

            for (auto [side_name, coset] : {std::pair{"left", left}, std::pair{"right", right}}) {
                if (!is_subquasigroup(sq.base, coset)) {
                    report.members_are_soft_quasigroups = false;
                    note(std::string(side_name) + " coset of " + sq.soft.params[i] + " at " +
                         symbols[x] + " is not a subquasigroup");
                }
            }
            if (!report.members_are_soft_quasigroups) continue;

            Quasigroup on_value = induced_quasigroup(sq.base, value);
            Quasigroup on_left = induced_quasigroup(sq.base, left);
            Quasigroup on_right = induced_quasigroup(sq.base, right);
            if (!are_isomorphic(on_value, on_left) || !are_isomorphic(on_value, on_right)) {
                report.members_isomorphic_to_source = false;
                note("coset of " + sq.soft.params[i] + " at " + symbols[x] +
                     " is not isomorphic to the source value");
            }
            if (!are_isomorphic(on_left, on_right)) {
                report.families_isomorphic = false;
                note("left and right cosets of " + sq.soft.params[i] + " at " + symbols[x] +
                     " are not isomorphic");
            }
        }
    }

    report.source_is_normal = true;
    for (int i = 0; i < sq.soft.param_count(); ++i)
        if (!is_normal_subquasigroup(sq.base, sq.soft.values[i])) report.source_is_normal = false;

    report.normality_preserved = true;
    if (report.source_is_normal && report.members_are_soft_quasigroups) {
        for (int x = 0; x < sq.base.size(); ++x)
            for (int i = 0; i < sq.soft.param_count(); ++i)
                for (Side side : {Side::left, Side::right}) {
                    SubsetMask coset = translate_subset(sq.base, sq.soft.values[i], x, side);
                    if (!is_normal_subquasigroup(sq.base, coset)) {
                        report.normality_preserved = false;
                        note(std::string(side == Side::left ? "left" : "right") + " coset of " +
                             sq.soft.params[i] + " at " + symbols[x] + " is not normal");
                    }
                }
    }
    return report;
}

}  // namespace qg
