#include <doctest.h>

#include "qg/exact.hpp"

using namespace qg;

TEST_CASE("big unsigned arithmetic") {
    CHECK(BigUint{0}.to_string() == "0");
    CHECK(BigUint{32}.to_string() == "32");
    CHECK((BigUint{1234567890123456789ull} * BigUint{1}).to_string() == "1234567890123456789");

    // cross the 64-bit boundary: 2^64 = 18446744073709551616
    CHECK(BigUint::pow(BigUint{2}, 64).to_string() == "18446744073709551616");
    CHECK(BigUint::pow10(20).to_string() == "1" + std::string(20, '0'));

    // (10^9 + 7)^3, computed independently
    CHECK(BigUint::pow(BigUint{1000000007ull}, 3).to_string() == "1000000021000000147000000343");

    CHECK(BigUint{5}.compare(BigUint{7}) < 0);
    CHECK(BigUint{7}.compare(BigUint{5}) > 0);
    CHECK(BigUint::pow(BigUint{3}, 0) == BigUint{1});
    CHECK(BigUint::pow(BigUint{0}, 5) == BigUint{0});
    CHECK((BigUint{0} * BigUint{123}).is_zero());
}

TEST_CASE("rationals reduce and render") {
    CHECK(Rational::make(10, 3).to_string() == "10/3");
    CHECK(Rational::make(6, 3).to_string() == "2");
    CHECK(Rational::make(0, 7) == Rational::make(0, 1));
    CHECK(Rational::make(4, 8) == Rational::make(1, 2));
    CHECK_THROWS(Rational::make(1, 0));
}

TEST_CASE("exact root rendering") {
    auto gm = [](std::uint64_t p, unsigned d) { return GeometricMean{BigUint{p}, d}; };
    CHECK(gm(27, 2).decimal4() == "5.1962");   // sqrt(27) = 5.19615...
    CHECK(gm(2, 10).decimal4() == "1.0718");   // 2^(1/10) = 1.07177...
    CHECK(gm(999, 3).decimal4() == "9.9967");  // cbrt(999) = 9.99666...
    CHECK(gm(1, 7).decimal4() == "1.0000");
    CHECK(gm(64, 64).exact_string() == "64^(1/64)");
    CHECK(gm(64, 64).decimal4() == "1.0671");  // 2^(6/64) = 1.06714...

    // pair equality is exact, not numeric: 4^(1/2) and 2^(1/1) differ as pairs
    CHECK(gm(4, 2) == gm(4, 2));
    CHECK_FALSE(gm(4, 2) == gm(2, 1));
}
