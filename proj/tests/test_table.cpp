#include <doctest.h>

#include "helpers.hpp"
#include "qg/table.hpp"

using namespace qg;

TEST_CASE("parsing the order-6 fixture") {
    CayleyTable t = testutil::fixture_table("q6.tbl");
    CHECK(t.n == 6);
    CHECK(t.symbols == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
    // 2 * 3 = 5
    CHECK(t.symbols[t.cells[1][2]] == "5");
    // last row as printed
    CHECK(t.cells[5] == std::vector<int>{5, 2, 1, 4, 3, 0});
}

TEST_CASE("singleton table") {
    CayleyTable t = parse_table("1\n1\n");
    CHECK(t.n == 1);
    CHECK(t.cells[0][0] == 0);
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("ragged row") {
        try {
            parse_table("a b c\na b c\nb c\nc a b\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
            CHECK(std::string(e.what()).find("ragged") != std::string::npos);
        }
    }
    SUBCASE("unknown symbol") {
        try {
            parse_table("a b\na b\nb x\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
            CHECK(std::string(e.what()).find("'x'") != std::string::npos);
        }
    }
    SUBCASE("duplicate symbol declaration") {
        CHECK_THROWS_AS(parse_table("a a\na a\na a\n"), ParseError);
    }
    SUBCASE("extra row") {
        CHECK_THROWS_AS(parse_table("a\na\na\n"), ParseError);
    }
    SUBCASE("missing rows") {
        CHECK_THROWS_AS(parse_table("a b\na b\n"), ParseError);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(parse_table(""), ParseError);
        CHECK_THROWS_AS(parse_table("# only comments\n"), ParseError);
    }
}

TEST_CASE("comments and blank lines are skipped") {
    CayleyTable t = parse_table("# header comment\n\na b\n# between\na b\nb a\n");
    CHECK(t.n == 2);
    CHECK(t.cells[1][0] == 1);
}

TEST_CASE("emit reproduces symbol order and rows") {
    CayleyTable t = testutil::fixture_table("q6.tbl");
    std::string emitted = emit_table(t);
    CHECK(parse_table(emitted) == t);
    CHECK(emitted.substr(0, 12) == "1 2 3 4 5 6\n");
    // emitted form is a fixed point
    CHECK(emit_table(parse_table(emitted)) == emitted);
}

TEST_CASE("round trip on random tables") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            CayleyTable t = testutil::random_latin_square(n, rng);
            CHECK(parse_table(emit_table(t)) == t);
        }
    }
}

TEST_CASE("custom symbols survive") {
    CayleyTable t = parse_table("x y\nx y\ny x\n");
    CHECK(t.symbol_index("y") == 1);
    CHECK(emit_table(t) == "x y\nx y\ny x\n");
}

TEST_CASE("arbitrary input is rejected cleanly, never crashes") {
    std::mt19937 rng(97);
    const std::string alphabet = "ab12 #\n\t:\\";
    for (int rep = 0; rep < 500; ++rep) {
        std::string text;
        int len = static_cast<int>(rng() % 60);
        for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        try {
            CayleyTable t = parse_table(text);
            CHECK(parse_table(emit_table(t)) == t);  // anything accepted round-trips
        } catch (const ParseError&) {
            // rejected with a line-numbered error: fine
        }
    }
}
