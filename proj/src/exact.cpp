#include "qg/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qg {

BigUint::BigUint(std::uint64_t value) {
    while (value) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffull));
        value >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::operator*(const BigUint& other) const {
    if (is_zero() || other.is_zero()) return BigUint{};
    BigUint out;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigUint& BigUint::operator*=(const BigUint& other) {
    *this = *this * other;
    return *this;
}

BigUint BigUint::pow(const BigUint& base, unsigned exponent) {
    BigUint result{1};
    BigUint acc = base;
    while (exponent) {
        if (exponent & 1u) result *= acc;
        exponent >>= 1;
        if (exponent) acc *= acc;
    }
    return result;
}

BigUint BigUint::pow10(unsigned exponent) { return pow(BigUint{10}, exponent); }

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    // repeated division by 10^9
    std::vector<std::uint32_t> work(limbs_.rbegin(), limbs_.rend());  // big-endian
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        std::vector<std::uint32_t> quot;
        for (std::uint32_t limb : work) {
            std::uint64_t cur = (rem << 32) | limb;
            std::uint32_t q = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
            if (!quot.empty() || q != 0) quot.push_back(q);
        }
        std::string chunk = std::to_string(rem);
        if (!quot.empty()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
        work = std::move(quot);
    }
    return out;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string GeometricMean::exact_string() const {
    if (degree == 1) return product.to_string();
    return product.to_string() + "^(1/" + std::to_string(degree) + ")";
}

std::string GeometricMean::decimal4() const {
    // target = product * 10^(4*degree); find the largest t with t^degree <= target
    const BigUint target = product * BigUint::pow10(4 * degree);

    std::uint64_t lo = 0, hi = 1;
    while (BigUint::pow(BigUint{hi}, degree) <= target) {
        lo = hi;
        if (hi > (std::uint64_t{1} << 62)) throw std::overflow_error("root out of range");
        hi *= 2;
    }
    while (lo + 1 < hi) {  // invariant: lo^d <= target < hi^d
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (BigUint::pow(BigUint{mid}, degree) <= target)
            lo = mid;
        else
            hi = mid;
    }

    // round half even: compare (2*lo + 1)^d against target * 2^d
    std::uint64_t scaled = lo;
    const BigUint half = BigUint::pow(BigUint{2 * lo + 1}, degree);
    const BigUint doubled = target * BigUint::pow(BigUint{2}, degree);
    int cmp = half.compare(doubled);
    if (cmp < 0)
        scaled = lo + 1;  // fraction above one half
    else if (cmp == 0 && (lo & 1))
        scaled = lo + 1;  // exact tie, round to even

    std::string digits = std::to_string(scaled);
    if (digits.size() <= 4) digits.insert(0, 5 - digits.size(), '0');
    digits.insert(digits.size() - 4, ".");
    return digits;
}

}  // namespace qg
