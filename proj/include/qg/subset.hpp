#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

// A subset of a carrier {0, ..., n-1}, n <= 64. Value type, compared by
// (universe, bits).
class SubsetMask {
public:
    static constexpr int max_universe = 64;

    explicit SubsetMask(int universe, std::uint64_t bits = 0);
    SubsetMask(int universe, std::initializer_list<int> members);

    static SubsetMask full(int universe);
    static SubsetMask single(int universe, int x);

    int universe() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int cardinality() const;
    bool empty() const { return bits_ == 0; }

    bool contains(int x) const { return (bits_ >> x) & 1u; }
    void add(int x);
    void remove(int x);

    bool subset_of(const SubsetMask& other) const;
    SubsetMask intersect(const SubsetMask& other) const;
    SubsetMask unite(const SubsetMask& other) const;
    bool is_full() const;

    // Members in ascending order.
    std::vector<int> members() const;

    // Space-separated display symbols, ascending member order.
    std::string to_string(const std::vector<std::string>& symbols) const;

    // Parses a whitespace-separated symbol list ("1 2 7 8").
    static SubsetMask parse(const std::string& text, const std::vector<std::string>& symbols);

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;

private:
    int n_;
    std::uint64_t bits_;
};

}  // namespace qg
