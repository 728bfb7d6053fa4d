#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qg/cosets.hpp"
#include "qg/iso.hpp"
#include "qg/subalgebra.hpp"

using namespace qg;

namespace {

SoftQuasigroup fixture_soft(const std::string& table_name, const std::string& soft_name) {
    Quasigroup q = testutil::fixture_quasigroup(table_name);
    SoftSet soft = parse_softset(testutil::fixture_text(soft_name), q.table());
    return classify(q, std::move(soft));
}

Quasigroup relabel(const Quasigroup& q, const Permutation& f) {
    const int n = q.size();
    CayleyTable t;
    t.n = n;
    t.symbols = CayleyTable::default_symbols(n);
    t.cells.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t.cells[f.apply(x)][f.apply(y)] = f.apply(q.mul(x, y));
    return Quasigroup::validate(std::move(t));
}

Permutation random_permutation(int n, std::mt19937& rng) {
    Permutation f;
    f.images.resize(n);
    for (int i = 0; i < n; ++i) f.images[i] = i;
    std::shuffle(f.images.begin(), f.images.end(), rng);
    return f;
}

}  // namespace

TEST_CASE("subset translation") {
    Quasigroup z3 = testutil::fixture_quasigroup("z3_medial.tbl");
    CHECK(translate_subset(z3, SubsetMask(3, {0}), 1, Side::left) == SubsetMask(3, {2}));

    Quasigroup z9 = testutil::fixture_quasigroup("z9_medial.tbl");
    SubsetMask line = SubsetMask::parse("00 10 20", z9.symbols());
    int x = z9.table().symbol_index("01");
    CHECK(translate_subset(z9, line, x, Side::left) ==
          SubsetMask::parse("02 12 22", z9.symbols()));

    // translations preserve cardinality
    std::mt19937 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 2 + static_cast<int>(rng() % 5);
        Quasigroup q = Quasigroup::validate(testutil::random_latin_square(n, rng));
        SubsetMask s(n, 1 + rng() % ((std::uint64_t{1} << n) - 1));
        for (Side side : {Side::left, Side::right})
            CHECK(translate_subset(q, s, static_cast<int>(rng() % n), side).cardinality() ==
                  s.cardinality());
    }
}

TEST_CASE("coset soft sets") {
    SoftQuasigroup z9 = fixture_soft("z9_medial.tbl", "z9_soft.sft");
    int x = z9.base.table().symbol_index("01");
    SoftSet left = coset_soft(z9, x, Side::left);
    CHECK(left.values[0] == SubsetMask::parse("02 12 22", z9.base.symbols()));
    CHECK(left.values[1] == SubsetMask::full(9));

    // a stabilizing element reproduces the source values
    SoftQuasigroup z3 = fixture_soft("z3_medial.tbl", "z3_soft.sft");
    CHECK(soft_equal(coset_soft(z3, 0, Side::left), z3.soft));
}

TEST_CASE("coset family of the order-3 medial square") {
    SoftQuasigroup z3 = fixture_soft("z3_medial.tbl", "z3_soft.sft");
    CosetFamily family = coset_family(z3, Side::left);
    REQUIRE(family.members.size() == 3);
    CHECK(family.members[0].values[0] == SubsetMask(3, {0}));
    CHECK(family.members[1].values[0] == SubsetMask(3, {2}));
    CHECK(family.members[2].values[0] == SubsetMask(3, {1}));

    // order-9 family: nine members whose line-values take three distinct
    // masks, each again a subquasigroup
    SoftQuasigroup z9 = fixture_soft("z9_medial.tbl", "z9_soft.sft");
    CosetFamily nine = coset_family(z9, Side::left);
    REQUIRE(nine.members.size() == 9);
    std::set<std::uint64_t> distinct_line_values;
    for (const auto& member : nine.members) {
        distinct_line_values.insert(member.values[0].bits());
        CHECK(is_subquasigroup(z9.base, member.values[0]));
    }
    CHECK(distinct_line_values.size() == 3);

    // singleton base: one member equal to the source
    Quasigroup one = Quasigroup::validate(parse_table("1\n1\n"));
    SoftSet soft;
    soft.universe = 1;
    soft.params = {"a"};
    soft.values = {SubsetMask(1, {0})};
    CosetFamily trivial = coset_family(classify(one, soft), Side::right);
    REQUIRE(trivial.members.size() == 1);
    CHECK(soft_equal(trivial.members[0], soft));
}

TEST_CASE("isomorphism search") {
    SUBCASE("relabeled copies are isomorphic and the witness verifies") {
        std::mt19937 rng(13);
        for (int rep = 0; rep < 15; ++rep) {
            int n = 1 + static_cast<int>(rng() % 6);
            Quasigroup q = Quasigroup::validate(testutil::random_latin_square(n, rng));
            Permutation f = random_permutation(n, rng);
            Quasigroup relabeled = relabel(q, f);
            auto witness = are_isomorphic(q, relabeled);
            REQUIRE(witness.has_value());
            CHECK(is_isomorphism(q, relabeled, *witness));

            // symmetry: a witness back exists and verifies
            auto back = are_isomorphic(relabeled, q);
            REQUIRE(back.has_value());
            CHECK(is_isomorphism(relabeled, q, *back));
        }
    }
    SUBCASE("the two groups of order 4 are not isomorphic") {
        Quasigroup z4 = testutil::fixture_quasigroup("z4.tbl");
        Quasigroup klein = testutil::fixture_quasigroup("z2z2.tbl");
        CHECK_FALSE(are_isomorphic(z4, klein).has_value());
    }
    SUBCASE("size mismatch is definitive absence") {
        Quasigroup z4 = testutil::fixture_quasigroup("z4.tbl");
        Quasigroup z3 = testutil::fixture_quasigroup("z3_medial.tbl");
        CHECK_FALSE(are_isomorphic(z4, z3).has_value());
    }
    SUBCASE("bound is refused") {
        Quasigroup z13 = testutil::cyclic_group(13);
        CHECK_THROWS_AS(are_isomorphic(z13, z13), BoundError);
    }
    SUBCASE("reflexive") {
        Quasigroup q6 = testutil::fixture_quasigroup("q6.tbl");
        auto witness = are_isomorphic(q6, q6);
        REQUIRE(witness.has_value());
        CHECK(is_isomorphism(q6, q6, *witness));
    }
}

TEST_CASE("cosets of the order-9 line are isomorphic to it") {
    Quasigroup z9 = testutil::fixture_quasigroup("z9_medial.tbl");
    SubsetMask line = SubsetMask::parse("00 10 20", z9.symbols());
    Quasigroup on_line = induced_quasigroup(z9, line);
    for (int x = 0; x < 9; ++x)
        for (Side side : {Side::left, Side::right}) {
            SubsetMask coset = translate_subset(z9, line, x, side);
            CHECK(is_subquasigroup(z9, coset));
            CHECK(are_isomorphic(on_line, induced_quasigroup(z9, coset)).has_value());
        }
}

TEST_CASE("is_normal_soft") {
    CHECK(is_normal_soft(fixture_soft("z9_medial.tbl", "z9_soft.sft")));
    CHECK(is_normal_soft(fixture_soft("z3_medial.tbl", "z3_soft.sft")));

    // on the order-9 medial square no non-normal subquasigroup exists at
    // all, established by exhausting all 22 of them
    Quasigroup z9 = testutil::fixture_quasigroup("z9_medial.tbl");
    for (const auto& h : all_subquasigroups(z9))
        CHECK(is_normal_subquasigroup(z9, h).has_value());

    // {1 2} is a subquasigroup of the order-6 fixture but not a normal one
    Quasigroup q6 = testutil::fixture_quasigroup("q6.tbl");
    SoftSet soft;
    soft.universe = 6;
    soft.params = {"g1"};
    soft.values = {SubsetMask::parse("1 2", q6.symbols())};
    CHECK_FALSE(is_normal_soft(classify(q6, soft)));
}

TEST_CASE("verify_coset_theorems") {
    SUBCASE("order-9 normal distributive battery passes") {
        CosetTheoremReport r = verify_coset_theorems(fixture_soft("z9_medial.tbl", "z9_soft.sft"));
        CHECK(r.members_are_soft_quasigroups);
        CHECK(r.members_isomorphic_to_source);
        CHECK(r.families_isomorphic);
        CHECK(r.source_is_normal);
        CHECK(r.normality_preserved);
        CHECK(r.all_pass());
        CHECK(r.counterexamples.empty());
    }
    SUBCASE("order-3 singleton-coset battery passes") {
        CHECK(verify_coset_theorems(fixture_soft("z3_medial.tbl", "z3_soft.sft")).all_pass());
    }
    SUBCASE("singleton base is a vacuous pass") {
        Quasigroup one = Quasigroup::validate(parse_table("1\n1\n"));
        SoftSet soft;
        soft.universe = 1;
        soft.params = {"a"};
        soft.values = {SubsetMask(1, {0})};
        CHECK(verify_coset_theorems(classify(one, soft)).all_pass());
    }
    SUBCASE("refused off distributive bases") {
        CHECK_THROWS_AS(verify_coset_theorems(fixture_soft("q6.tbl", "q6_soft.sft")),
                        PreconditionError);
    }
}

TEST_CASE("quotient families") {
    SUBCASE("order-9 line value: order-3 commutative distributive quotient, bijective labels") {
        SoftQuasigroup z9 = fixture_soft("z9_medial.tbl", "z9_soft.sft");
        for (Side side : {Side::left, Side::right}) {
            QuotientFamily family = quotient_family(z9, side);
            REQUIRE(family.entries.size() == 2);

            const QuotientEntry& line = family.entries[0];
            CHECK(line.param == "g1");
            CHECK(line.quotient.size() == 3);
            CHECK(line.quotient_commutative);
            CHECK(line.quotient_distributive);
            CHECK(line.correspondence_bijective);
            CHECK(line.coset_to_block.size() == 3);
            // block size times value size covers the carrier
            CHECK(line.quotient.size() * 3 == 9);

            const QuotientEntry& full = family.entries[1];
            CHECK(full.quotient.size() == 1);
            CHECK(full.correspondence_bijective);
        }
    }
    SUBCASE("order-3 singleton value: quotient of order 3 via the discrete congruence") {
        SoftQuasigroup z3 = fixture_soft("z3_medial.tbl", "z3_soft.sft");
        QuotientFamily family = quotient_family(z3, Side::left);
        REQUIRE(family.entries.size() == 1);
        CHECK(family.entries[0].quotient.size() == 3);
        CHECK(family.entries[0].correspondence_bijective);
        CHECK(family.entries[0].quotient_commutative);
        CHECK(family.entries[0].quotient_distributive);
    }
    SUBCASE("non-normal value refused naming the parameter") {
        Quasigroup q6 = testutil::fixture_quasigroup("q6.tbl");
        SoftSet soft;
        soft.universe = 6;
        soft.params = {"g1"};
        soft.values = {SubsetMask::parse("1 2", q6.symbols())};
        SoftQuasigroup sq = classify(q6, soft);
        REQUIRE(sq.is_soft_quasigroup());
        try {
            quotient_family(sq, Side::left);
            FAIL("expected PreconditionError");
        } catch (const PreconditionError& e) {
            CHECK(std::string(e.what()).find("g1") != std::string::npos);
        }
    }
}
