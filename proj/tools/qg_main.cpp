// qg: command-line toolkit for finite quasigroups and soft quasigroups.
//
// Exit codes: 0 = pass/valid, 1 = a checked property fails or an input
// structure is invalid (a report is still emitted), 2 = parse/usage error.
// Reports are byte-stable: the same inputs produce the same bytes.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qg/cosets.hpp"
#include "qg/iso.hpp"
#include "qg/report.hpp"
#include "qg/softquasigroup.hpp"
#include "qg/subalgebra.hpp"

namespace {

using namespace qg;

struct CommandContext {
    std::string format = "text";

    int emit(const Report& report, int exit_code) const {
        std::cout << (format == "json" ? emit_json(report) : emit_text(report));
        return exit_code;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string defect_line(const LatinDefect& d) {
    std::string where = d.axis == Axis::row ? "row " : "column ";
    std::string positions;
    for (int p : d.positions) {
        if (!positions.empty()) positions += ' ';
        positions += std::to_string(p + 1);
    }
    std::string out = where + std::to_string(d.index + 1) + " repeats '" + d.symbol + "' at " +
                      (d.axis == Axis::row ? "columns " : "rows ") + positions;
    if (!d.missing_symbol.empty()) out += "; missing '" + d.missing_symbol + "'";
    return out;
}

void describe_table(Report& report, const CayleyTable& table) {
    auto& s = report.add_section("table");
    report.add(s, "n", std::to_string(table.n));
    std::string symbols;
    for (int i = 0; i < table.n; ++i) {
        if (i) symbols += ' ';
        symbols += table.symbols[i];
    }
    report.add(s, "symbols", symbols);
}

// Shared preamble: parse + validate, emitting an invalid-input report when
// the table is not a Latin square. Returns nothing in that case.
std::optional<Quasigroup> load_quasigroup(const CommandContext& ctx, const std::string& path,
                                          int& exit_code) {
    CayleyTable table = parse_table(read_file(path));
    auto defects = Quasigroup::check_latin(table);
    if (defects.empty()) {
        exit_code = 0;
        return Quasigroup::validate(std::move(table));
    }
    Report report;
    report.status = Report::Status::invalid_input;
    describe_table(report, table);
    auto& s = report.add_section("validate");
    report.add(s, "latin", "false");
    report.add(s, "defects", std::to_string(defects.size()));
    for (const auto& d : defects) report.counterexample(defect_line(d));
    exit_code = ctx.emit(report, 1);
    return std::nullopt;
}

std::string class_string(AlgebraClass c) {
    if (c == AlgebraClass::none) return "not a soft groupoid";
    return "soft " + std::string(to_string(c));
}

std::string cell_text(const Quasigroup& q, const ClassificationCounterexample& ce,
                      const SubsetMask& value) {
    const auto& sym = q.symbols();
    return "parameter " + ce.param + ": " + sym[ce.x] + " " + std::string(to_string(ce.kind)) +
           " " + sym[ce.y] + " = " + sym[ce.result] + " escapes {" + value.to_string(sym) + "}";
}

void add_classification(Report& report, const SoftQuasigroup& sq) {
    auto& s = report.add_section("classification");
    report.add(s, "base_class", std::string(to_string(base_class(sq.base))));
    for (int i = 0; i < sq.soft.param_count(); ++i) {
        AlgebraClass level = sq.per_param[i].level();
        report.add(s, sq.soft.params[i],
                   level == AlgebraClass::none ? "not closed" : std::string(to_string(level)));
    }
    report.add(s, "class", class_string(sq.overall));
    for (const auto& ce : sq.counterexamples) {
        int i = sq.soft.param_index(ce.param);
        report.counterexample(cell_text(sq.base, ce, sq.soft.values[i]));
    }
}

// ---------------------------------------------------------------- commands

int cmd_validate(const CommandContext& ctx, const std::string& path) {
    CayleyTable table = parse_table(read_file(path));
    auto defects = Quasigroup::check_latin(table);
    Report report;
    describe_table(report, table);
    auto& s = report.add_section("validate");
    report.add(s, "latin", defects.empty() ? "true" : "false");
    if (defects.empty()) {
        report.status = Report::Status::pass;
        return ctx.emit(report, 0);
    }
    report.status = Report::Status::invalid_input;
    report.add(s, "defects", std::to_string(defects.size()));
    for (const auto& d : defects) report.counterexample(defect_line(d));
    return ctx.emit(report, 1);
}

int cmd_parastrophe(const CommandContext& ctx, const std::string& path, const std::string& kind) {
    int code = 0;
    auto q = load_quasigroup(ctx, path, code);
    if (!q) return code;
    Quasigroup derived = q->parastrophe(*op_kind_from_string(kind));
    if (ctx.format == "json") {
        Report report;
        describe_table(report, derived.table());
        auto& s = report.add_section("parastrophe");
        report.add(s, "kind", kind);
        for (int r = 0; r < derived.size(); ++r) {
            std::string row;
            for (int c = 0; c < derived.size(); ++c) {
                if (c) row += ' ';
                row += derived.symbols()[derived.mul(r, c)];
            }
            report.add(s, "row" + std::to_string(r + 1), row);
        }
        return ctx.emit(report, 0);
    }
    std::cout << emit_table(derived.table());
    return 0;
}

int cmd_subs(const CommandContext& ctx, const std::string& path) {
    int code = 0;
    auto q = load_quasigroup(ctx, path, code);
    if (!q) return code;
    auto subs = all_subquasigroups(*q);
    Report report;
    describe_table(report, q->table());
    auto& s = report.add_section("subquasigroups");
    report.add(s, "count", std::to_string(subs.size()));
    for (std::size_t i = 0; i < subs.size(); ++i)
        report.add(s, "sub" + std::to_string(i + 1), subs[i].to_string(q->symbols()));
    return ctx.emit(report, 0);
}

int cmd_soft_check(const CommandContext& ctx, const std::string& table_path,
                   const std::string& soft_path) {
    int code = 0;
    auto q = load_quasigroup(ctx, table_path, code);
    if (!q) return code;
    SoftSet soft = parse_softset(read_file(soft_path), q->table());
    SoftQuasigroup sq = classify(*q, std::move(soft));

    Report report;
    describe_table(report, q->table());
    add_classification(report, sq);
    report.status = sq.is_soft_quasigroup() ? Report::Status::pass : Report::Status::fail;
    return ctx.emit(report, sq.is_soft_quasigroup() ? 0 : 1);
}

int cmd_soft_metrics(const CommandContext& ctx, const std::string& table_path,
                     const std::string& soft_path) {
    int code = 0;
    auto q = load_quasigroup(ctx, table_path, code);
    if (!q) return code;
    SoftSet soft = parse_softset(read_file(soft_path), q->table());
    SoftQuasigroup sq = classify(*q, std::move(soft));

    Report report;
    describe_table(report, q->table());
    add_classification(report, sq);
    if (!sq.is_soft_quasigroup()) {
        report.status = Report::Status::fail;
        return ctx.emit(report, 1);
    }
    Metrics m = metrics(sq);
    auto& s = report.add_section("metrics");
    report.add(s, "parameters", std::to_string(sq.soft.param_count()));
    report.add(s, "order_raw", std::to_string(m.order_raw));
    report.add(s, "order_distinct_proper", std::to_string(m.order_distinct_proper));
    report.add(s, "am", m.am.to_string());
    report.add(s, "gm", m.gm.exact_string());
    report.add(s, "gm_decimal", m.gm.decimal4());
    report.add(s, "parastrophe_invariant", parastrophe_metric_equality(sq) ? "true" : "false");
    report.status = Report::Status::pass;
    return ctx.emit(report, 0);
}

int cmd_cosets(const CommandContext& ctx, const std::string& table_path,
               const std::string& soft_path, const std::string& side_name) {
    int code = 0;
    auto q = load_quasigroup(ctx, table_path, code);
    if (!q) return code;
    SoftSet soft = parse_softset(read_file(soft_path), q->table());
    SoftQuasigroup sq = classify(*q, std::move(soft));

    Report report;
    describe_table(report, q->table());
    if (!sq.is_soft_quasigroup()) {
        add_classification(report, sq);
        report.status = Report::Status::fail;
        return ctx.emit(report, 1);
    }
    Side side = side_name == "left" ? Side::left : Side::right;
    CosetFamily family = coset_family(sq, side);

    bool distributive = q->properties().is_distributive();
    bool all_members_soft = true;
    auto& head = report.add_section("family");
    report.add(head, "side", side_name);
    report.add(head, "members", std::to_string(family.members.size()));
    report.add(head, "base_distributive", distributive ? "true" : "false");

    for (int x = 0; x < q->size(); ++x) {
        auto& s = report.add_section("coset x=" + q->symbols()[x]);
        const SoftSet& member = family.members[x];
        for (int i = 0; i < member.param_count(); ++i)
            report.add(s, member.params[i], member.values[i].to_string(q->symbols()));
        SoftQuasigroup member_sq = classify(*q, member);
        report.add(s, "class", class_string(member_sq.overall));
        if (!member_sq.is_soft_quasigroup()) {
            all_members_soft = false;
            if (distributive)
                report.counterexample("coset at " + q->symbols()[x] +
                                      " is not a soft quasigroup over a distributive base");
        }
    }
    report.add(head, "all_members_soft_quasigroups", all_members_soft ? "true" : "false");
    bool failed = distributive && !all_members_soft;
    report.status = failed ? Report::Status::fail : Report::Status::pass;
    return ctx.emit(report, failed ? 1 : 0);
}

int cmd_congruences(const CommandContext& ctx, const std::string& path) {
    int code = 0;
    auto q = load_quasigroup(ctx, path, code);
    if (!q) return code;
    auto congruences = all_normal_congruences(*q);
    Report report;
    describe_table(report, q->table());
    auto& s = report.add_section("normal_congruences");
    report.add(s, "count", std::to_string(congruences.size()));
    for (std::size_t i = 0; i < congruences.size(); ++i)
        report.add(s, "c" + std::to_string(i + 1),
                   format_partition(congruences[i], q->symbols()));
    return ctx.emit(report, 0);
}

int cmd_quotient(const CommandContext& ctx, const std::string& path,
                 const std::string& subset_text) {
    int code = 0;
    auto q = load_quasigroup(ctx, path, code);
    if (!q) return code;
    SubsetMask subset = SubsetMask::parse(subset_text, q->symbols());
    if (subset.empty()) throw Error("empty subset");

    Report report;
    describe_table(report, q->table());
    auto& s = report.add_section("subset");
    report.add(s, "members", subset.to_string(q->symbols()));

    if (!is_subquasigroup(*q, subset)) {
        report.add(s, "subquasigroup", "false");
        report.status = Report::Status::fail;
        for (OpKind kind : {OpKind::mul, OpKind::ldiv, OpKind::rdiv}) {
            for (int x : subset.members()) {
                for (int y : subset.members()) {
                    int z = q->evaluate(kind, x, y);
                    if (!subset.contains(z)) {
                        report.counterexample(q->symbols()[x] + " " +
                                              std::string(to_string(kind)) + " " +
                                              q->symbols()[y] + " = " + q->symbols()[z] +
                                              " escapes the subset");
                        return ctx.emit(report, 1);
                    }
                }
            }
        }
    }
    report.add(s, "subquasigroup", "true");

    auto theta = is_normal_subquasigroup(*q, subset);
    report.add(s, "normal", theta ? "true" : "false");
    if (!theta) {
        report.status = Report::Status::fail;
        std::vector<std::pair<int, int>> pairs;
        auto members = subset.members();
        for (std::size_t i = 1; i < members.size(); ++i)
            pairs.emplace_back(members[0], members[i]);
        Partition grown = generated_normal_congruence(*q, pairs);
        SubsetMask block(q->size());
        for (int x = 0; x < q->size(); ++x)
            if (grown.same_block(x, members[0])) block.add(x);
        report.counterexample("the least congruence gluing the subset grows its block to {" +
                              block.to_string(q->symbols()) + "}");
        return ctx.emit(report, 1);
    }

    auto& c = report.add_section("congruence");
    report.add(c, "blocks", format_partition(*theta, q->symbols()));

    Quasigroup quo = quotient(*q, *theta);
    auto& t = report.add_section("quotient");
    report.add(t, "order", std::to_string(quo.size()));
    std::string symbols;
    for (int i = 0; i < quo.size(); ++i) {
        if (i) symbols += ' ';
        symbols += quo.symbols()[i];
    }
    report.add(t, "symbols", symbols);
    for (int r = 0; r < quo.size(); ++r) {
        std::string row;
        for (int col = 0; col < quo.size(); ++col) {
            if (col) row += ' ';
            row += quo.symbols()[quo.mul(r, col)];
        }
        report.add(t, "row" + std::to_string(r + 1), row);
    }
    auto props = quo.properties();
    report.add(t, "commutative", props.is_commutative ? "true" : "false");
    report.add(t, "distributive", props.is_distributive() ? "true" : "false");
    return ctx.emit(report, 0);
}

int cmd_iso(const CommandContext& ctx, const std::string& path1, const std::string& path2) {
    int code = 0;
    auto q1 = load_quasigroup(ctx, path1, code);
    if (!q1) return code;
    auto q2 = load_quasigroup(ctx, path2, code);
    if (!q2) return code;

    Report report;
    auto& s = report.add_section("isomorphism");
    report.add(s, "n1", std::to_string(q1->size()));
    report.add(s, "n2", std::to_string(q2->size()));
    auto witness = are_isomorphic(*q1, *q2);
    report.add(s, "isomorphic", witness ? "true" : "false");
    if (witness) {
        std::string map;
        for (int x = 0; x < q1->size(); ++x) {
            if (x) map += ", ";
            map += q1->symbols()[x] + "->" + q2->symbols()[witness->apply(x)];
        }
        report.add(s, "witness", map);
        report.status = Report::Status::pass;
        return ctx.emit(report, 0);
    }
    report.status = Report::Status::fail;
    report.counterexample(q1->size() != q2->size()
                              ? "carriers have different sizes"
                              : "exhaustive search finds no isomorphism");
    return ctx.emit(report, 1);
}

// ------------------------------------------------------------------ suite

struct SuiteRunner {
    Report report;
    bool any_failed = false;

    void battery(const std::string& name, bool applicable, const std::string& skip_reason,
                 const std::function<bool(Report::Section&)>& run) {
        auto& s = report.add_section(name);
        if (!applicable) {
            report.add(s, "verdict", "skipped (" + skip_reason + ")");
            return;
        }
        bool ok = run(s);
        report.add(s, "verdict", ok ? "pass" : "fail");
        if (!ok) any_failed = true;
    }
};

int cmd_suite(const CommandContext& ctx, const std::string& table_path,
              const std::string& soft_path) {
    int code = 0;
    auto loaded = load_quasigroup(ctx, table_path, code);
    if (!loaded) return code;
    const Quasigroup& q = *loaded;
    const int n = q.size();
    const auto props = q.properties();
    const bool distributive = props.is_distributive();

    SuiteRunner runner;
    describe_table(runner.report, q.table());
    {
        auto& s = runner.report.add_section("base-properties");
        auto flag = [&](const char* k, bool v) { runner.report.add(s, k, v ? "true" : "false"); };
        flag("loop", props.is_loop);
        if (props.identity) runner.report.add(s, "identity", q.symbols()[*props.identity]);
        flag("group", props.is_group);
        flag("commutative", props.is_commutative);
        flag("idempotent", props.is_idempotent);
        flag("flexible", props.is_flexible);
        flag("left_distributive", props.is_left_distributive);
        flag("right_distributive", props.is_right_distributive);
    }

    runner.battery("parastrophe-identities", true, "", [&](Report::Section& s) {
        bool ok = true;
        for (OpKind kind : all_op_kinds) {
            Quasigroup derived = q.parastrophe(kind);
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y) {
                    int z = derived.mul(x, y);
                    switch (kind) {
                        case OpKind::mul: ok = z == q.mul(x, y); break;
                        case OpKind::opp: ok = z == q.mul(y, x); break;
                        case OpKind::ldiv: ok = q.mul(x, z) == y; break;
                        case OpKind::rdiv: ok = q.mul(z, y) == x; break;
                        case OpKind::ordiv: ok = z == q.rdiv(y, x); break;
                        case OpKind::oldiv: ok = z == q.ldiv(y, x); break;
                    }
                }
        }
        ok = ok && q.parastrophe(OpKind::opp).parastrophe(OpKind::opp) == q;
        runner.report.add(s, "all_derived_latin", "true");
        return ok;
    });

    const bool enumerable = n <= 16;
    std::vector<SubsetMask> subs;
    if (enumerable) subs = all_subquasigroups(q);

    runner.battery("subquasigroup-invariance", enumerable, "carrier too large",
                   [&](Report::Section& s) {
                       runner.report.add(s, "subquasigroups", std::to_string(subs.size()));
                       bool ok = true;
                       for (const auto& h : subs)
                           if (!check_parastrophe_invariance(q, h)) {
                               ok = false;
                               runner.report.counterexample(
                                   "subquasigroup {" + h.to_string(q.symbols()) +
                                   "} is lost under some derived operation");
                           }
                       return ok;
                   });

    runner.battery("division-closure-criterion", n <= 12, "carrier too large",
                   [&](Report::Section& s) {
                       bool ok = true;
                       std::uint64_t checked = 0;
                       const std::uint64_t limit = std::uint64_t{1} << n;
                       for (std::uint64_t bits = 1; bits < limit; ++bits) {
                           SubsetMask m(n, bits);
                           ++checked;
                           if (is_subquasigroup(q, m) != is_subquasigroup_of_table(q.table(), m)) {
                               ok = false;
                               runner.report.counterexample(
                                   "division closure and induced-table routes disagree on {" +
                                   m.to_string(q.symbols()) + "}");
                           }
                       }
                       runner.report.add(s, "subsets_checked", std::to_string(checked));
                       return ok;
                   });

    runner.battery(
        "group-subset-criteria", props.is_group && n <= 12,
        props.is_group ? "carrier too large" : "base is not a group", [&](Report::Section& s) {
            bool ok = true;
            const std::uint64_t limit = std::uint64_t{1} << n;
            for (std::uint64_t bits = 1; bits < limit; ++bits) {
                SubsetMask m(n, bits);
                if (!group_criterion(q, m).all_equal()) {
                    ok = false;
                    runner.report.counterexample("group subset criteria disagree on {" +
                                                 m.to_string(q.symbols()) + "}");
                }
            }
            runner.report.add(s, "subsets_checked", std::to_string(limit - 1));
            return ok;
        });

    runner.battery("distributive-consequences", distributive, "base is not distributive",
                   [&](Report::Section& s) {
                       runner.report.add(s, "idempotent", props.is_idempotent ? "true" : "false");
                       runner.report.add(s, "flexible", props.is_flexible ? "true" : "false");
                       return props.is_idempotent && props.is_flexible;
                   });

    runner.battery("parastrophes-distributive", distributive, "base is not distributive",
                   [&](Report::Section&) {
                       for (OpKind kind : all_op_kinds)
                           if (!q.parastrophe(kind).properties().is_distributive()) return false;
                       return true;
                   });

    runner.battery("empty-nuclei", distributive && n > 1,
                   distributive ? "trivial carrier" : "base is not distributive",
                   [&](Report::Section& s) {
                       Nuclei nuclei = q.nuclei();
                       runner.report.add(s, "left_nucleus",
                                         nuclei.left.empty()
                                             ? "{}"
                                             : "{" + nuclei.left.to_string(q.symbols()) + "}");
                       runner.report.add(s, "right_nucleus",
                                         nuclei.right.empty()
                                             ? "{}"
                                             : "{" + nuclei.right.to_string(q.symbols()) + "}");
                       return nuclei.left.empty() && nuclei.right.empty();
                   });

    runner.battery(
        "coset-subquasigroups", distributive && enumerable,
        distributive ? "carrier too large" : "base is not distributive", [&](Report::Section& s) {
            bool ok = true;
            for (const auto& h : subs) {
                Quasigroup on_h = induced_quasigroup(q, h);
                for (int x = 0; x < n && ok; ++x)
                    for (Side side : {Side::left, Side::right}) {
                        SubsetMask coset = translate_subset(q, h, x, side);
                        if (!is_subquasigroup(q, coset) ||
                            !are_isomorphic(on_h, induced_quasigroup(q, coset))) {
                            ok = false;
                            runner.report.counterexample(
                                "translate of {" + h.to_string(q.symbols()) + "} at " +
                                q.symbols()[x] + " breaks the coset laws");
                        }
                    }
            }
            runner.report.add(s, "subquasigroups", std::to_string(subs.size()));
            return ok;
        });

    runner.battery(
        "normal-coset-quotient", distributive && enumerable,
        distributive ? "carrier too large" : "base is not distributive", [&](Report::Section& s) {
            bool ok = true;
            int normal_count = 0;
            for (const auto& h : subs) {
                auto theta = is_normal_subquasigroup(q, h);
                if (!theta) continue;
                ++normal_count;
                for (int x = 0; x < n; ++x)
                    for (Side side : {Side::left, Side::right})
                        if (!is_normal_subquasigroup(q, translate_subset(q, h, x, side))) {
                            ok = false;
                            runner.report.counterexample("coset of normal {" +
                                                         h.to_string(q.symbols()) +
                                                         "} is not normal");
                        }
                auto quo_props = quotient(q, *theta).properties();
                if (!quo_props.is_commutative || !quo_props.is_distributive()) {
                    ok = false;
                    runner.report.counterexample("quotient by {" + h.to_string(q.symbols()) +
                                                 "} is not commutative distributive");
                }
            }
            runner.report.add(s, "normal_subquasigroups", std::to_string(normal_count));
            return ok;
        });

    if (!soft_path.empty()) {
        SoftSet soft = parse_softset(read_file(soft_path), q.table());
        SoftQuasigroup sq = classify(q, soft);
        add_classification(runner.report, sq);
        const bool soft_ok = sq.is_soft_quasigroup();

        runner.battery("soft-classification", true, "", [&](Report::Section&) {
            return soft_ok;
        });

        runner.battery("six-operation-equivalence", true, "", [&](Report::Section&) {
            return verify_six_equivalences(q, soft);
        });

        runner.battery("soft-division-criterion", true, "", [&](Report::Section& s) {
            bool criterion = soft_quasigroup_criterion(q, soft);
            runner.report.add(s, "criterion", criterion ? "true" : "false");
            return criterion == soft_ok;
        });

        runner.battery("soft-group-criteria", props.is_group, "base is not a group",
                       [&](Report::Section& s) {
                           SoftGroupCriteria c = soft_group_criterion(q, soft);
                           auto flag = [](bool v) { return v ? "true" : "false"; };
                           runner.report.add(s, "soft_group", flag(c.soft_group));
                           runner.report.add(s, "soft_loop", flag(c.soft_loop));
                           runner.report.add(s, "rdiv_soft_groupoid", flag(c.rdiv_soft_groupoid));
                           runner.report.add(s, "ldiv_soft_groupoid", flag(c.ldiv_soft_groupoid));
                           return c.all_equal();
                       });

        runner.battery("metrics-invariance", soft_ok, "not a soft quasigroup",
                       [&](Report::Section& s) {
                           Metrics m = metrics(sq);
                           runner.report.add(s, "order_raw", std::to_string(m.order_raw));
                           runner.report.add(s, "am", m.am.to_string());
                           runner.report.add(s, "gm", m.gm.exact_string());
                           return parastrophe_metric_equality(sq);
                       });

        runner.battery("distributive-soft", distributive && soft_ok,
                       soft_ok ? "base is not distributive" : "not a soft quasigroup",
                       [&](Report::Section& s) {
                           DistributiveSoftReport r = is_distributive_soft(sq);
                           auto flag = [](bool v) { return v ? "true" : "false"; };
                           runner.report.add(s, "parastrophes_distributive",
                                             flag(r.parastrophes_distributive));
                           runner.report.add(s, "parastrophes_idempotent",
                                             flag(r.parastrophes_idempotent));
                           runner.report.add(s, "parastrophes_flexible",
                                             flag(r.parastrophes_flexible));
                           return r.distributive && r.parastrophes_distributive &&
                                  r.parastrophes_idempotent && r.parastrophes_flexible;
                       });

        runner.battery("nuclear-status", true, "", [&](Report::Section& s) {
            NuclearStatus status = nuclear_check(sq);
            auto flag = [](bool v) { return v ? "true" : "false"; };
            runner.report.add(s, "left_nuclear", flag(status.is_left_nuclear));
            runner.report.add(s, "right_nuclear", flag(status.is_right_nuclear));
            if (distributive && n > 1)
                return !status.is_left_nuclear && !status.is_right_nuclear;
            return true;
        });

        runner.battery("coset-families", distributive && soft_ok,
                       soft_ok ? "base is not distributive" : "not a soft quasigroup",
                       [&](Report::Section& s) {
                           CosetTheoremReport r = verify_coset_theorems(sq);
                           auto flag = [](bool v) { return v ? "true" : "false"; };
                           runner.report.add(s, "members_are_soft_quasigroups",
                                             flag(r.members_are_soft_quasigroups));
                           runner.report.add(s, "members_isomorphic_to_source",
                                             flag(r.members_isomorphic_to_source));
                           runner.report.add(s, "families_isomorphic",
                                             flag(r.families_isomorphic));
                           runner.report.add(s, "source_is_normal", flag(r.source_is_normal));
                           runner.report.add(s, "normality_preserved",
                                             flag(r.normality_preserved));
                           for (const auto& ce : r.counterexamples)
                               runner.report.counterexample(ce);
                           return r.all_pass();
                       });

        bool normal_soft = soft_ok;
        if (soft_ok)
            for (const auto& value : soft.values)
                if (!is_normal_subquasigroup(q, value)) normal_soft = false;

        runner.battery(
            "quotient-correspondence", distributive && normal_soft,
            soft_ok ? (distributive ? "soft quasigroup is not normal" : "base is not distributive")
                    : "not a soft quasigroup",
            [&](Report::Section& s) {
                bool ok = true;
                for (Side side : {Side::left, Side::right}) {
                    QuotientFamily family = quotient_family(sq, side);
                    for (const auto& entry : family.entries) {
                        std::string prefix =
                            std::string(side == Side::left ? "left." : "right.") + entry.param;
                        runner.report.add(s, prefix + ".order",
                                          std::to_string(entry.quotient.size()));
                        runner.report.add(
                            s, prefix + ".bijective",
                            entry.correspondence_bijective ? "true" : "false");
                        if (!entry.correspondence_bijective || !entry.quotient_commutative ||
                            !entry.quotient_distributive)
                            ok = false;
                    }
                }
                return ok;
            });
    }

    runner.report.status = runner.any_failed ? Report::Status::fail : Report::Status::pass;
    return ctx.emit(runner.report, runner.any_failed ? 1 : 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quasigroup and soft quasigroup toolkit"};
    app.require_subcommand(1);

    CommandContext ctx;
    app.add_option("--format", ctx.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string table_path, table_path2, soft_path, kind = "opp", side = "left", subset_text;

    auto* c_validate = app.add_subcommand("validate", "check a table for the Latin property");
    c_validate->add_option("table", table_path, "table file")->required();

    auto* c_parastrophe = app.add_subcommand("parastrophe", "derive a parastrophe table");
    c_parastrophe->add_option("table", table_path, "table file")->required();
    c_parastrophe->add_option("--kind", kind, "operation")
        ->required()
        ->check(CLI::IsMember({"opp", "ldiv", "rdiv", "ordiv", "oldiv", "mul"}));

    auto* c_subs = app.add_subcommand("subs", "enumerate all subquasigroups");
    c_subs->add_option("table", table_path, "table file")->required();

    auto* c_soft = app.add_subcommand("soft", "soft-set analyses");
    c_soft->require_subcommand(1);
    auto* c_soft_check = c_soft->add_subcommand("check", "classify a soft set over a table");
    c_soft_check->add_option("table", table_path, "table file")->required();
    c_soft_check->add_option("softset", soft_path, "soft-set file")->required();
    auto* c_soft_metrics = c_soft->add_subcommand("metrics", "order and mean metrics");
    c_soft_metrics->add_option("table", table_path, "table file")->required();
    c_soft_metrics->add_option("softset", soft_path, "soft-set file")->required();

    auto* c_cosets = app.add_subcommand("cosets", "coset family of a soft quasigroup");
    c_cosets->add_option("table", table_path, "table file")->required();
    c_cosets->add_option("softset", soft_path, "soft-set file")->required();
    c_cosets->add_option("--side", side, "translation side")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));

    auto* c_congruences = app.add_subcommand("congruences", "enumerate normal congruences");
    c_congruences->add_option("table", table_path, "table file")->required();

    auto* c_quotient = app.add_subcommand("quotient", "quotient by a normal subquasigroup");
    c_quotient->add_option("table", table_path, "table file")->required();
    c_quotient->add_option("--subset", subset_text, "subset symbols, e.g. \"1 3 4\"")->required();

    auto* c_iso = app.add_subcommand("iso", "isomorphism test between two tables");
    c_iso->add_option("table1", table_path, "first table file")->required();
    c_iso->add_option("table2", table_path2, "second table file")->required();

    auto* c_suite = app.add_subcommand("suite", "run every applicable verification battery");
    c_suite->add_option("table", table_path, "table file")->required();
    c_suite->add_option("softset", soft_path, "soft-set file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_validate->parsed()) return cmd_validate(ctx, table_path);
        if (c_parastrophe->parsed()) return cmd_parastrophe(ctx, table_path, kind);
        if (c_subs->parsed()) return cmd_subs(ctx, table_path);
        if (c_soft_check->parsed()) return cmd_soft_check(ctx, table_path, soft_path);
        if (c_soft_metrics->parsed()) return cmd_soft_metrics(ctx, table_path, soft_path);
        if (c_cosets->parsed()) return cmd_cosets(ctx, table_path, soft_path, side);
        if (c_congruences->parsed()) return cmd_congruences(ctx, table_path);
        if (c_quotient->parsed()) return cmd_quotient(ctx, table_path, subset_text);
        if (c_iso->parsed()) return cmd_iso(ctx, table_path, table_path2);
        if (c_suite->parsed()) return cmd_suite(ctx, table_path, soft_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BoundError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
