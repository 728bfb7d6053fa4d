#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qg {

// Arbitrary-size unsigned integer, base 2^32. Just enough arithmetic for
// exact metric comparisons and root rendering; no division.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor)

    static BigUint pow(const BigUint& base, unsigned exponent);
    static BigUint pow10(unsigned exponent);

    BigUint operator*(const BigUint& other) const;
    BigUint& operator*=(const BigUint& other);

    int compare(const BigUint& other) const;  // -1, 0, +1
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }

    bool is_zero() const { return limbs_.empty(); }
    std::string to_string() const;  // decimal

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros
    void trim();
};

// Reduced fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    std::string to_string() const;  // "p/q", or "p" when q == 1

    friend bool operator==(const Rational&, const Rational&) = default;
};

// Exact |A|-th root of a product, kept as the (product, degree) pair so that
// equality checks never go through floating point.
struct GeometricMean {
    BigUint product;
    unsigned degree = 1;

    // "P^(1/d)", or just "P" when d == 1.
    std::string exact_string() const;

    // Decimal value to 4 places, round-half-even, computed with integer
    // arithmetic only (largest t with t^d <= product * 10^(4d), then an
    // exact tie test).
    std::string decimal4() const;

    friend bool operator==(const GeometricMean& a, const GeometricMean& b) {
        return a.degree == b.degree && a.product == b.product;
    }
};

}  // namespace qg
