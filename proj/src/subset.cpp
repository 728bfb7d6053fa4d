#include "qg/subset.hpp"

#include <bit>
#include <sstream>

namespace qg {
namespace {

void check_universe(int n) {
    if (n < 1 || n > SubsetMask::max_universe)
        throw PreconditionError("subset universe must be in 1.." +
                                std::to_string(SubsetMask::max_universe) + ", got " +
                                std::to_string(n));
}

std::uint64_t universe_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

SubsetMask::SubsetMask(int universe, std::uint64_t bits) : n_(universe), bits_(bits) {
    check_universe(universe);
    if (bits & ~universe_mask(universe))
        throw PreconditionError("subset bits outside universe");
}

SubsetMask::SubsetMask(int universe, std::initializer_list<int> members) : SubsetMask(universe) {
    for (int x : members) add(x);
}

SubsetMask SubsetMask::full(int universe) {
    check_universe(universe);
    return SubsetMask(universe, universe_mask(universe));
}

SubsetMask SubsetMask::single(int universe, int x) {
    SubsetMask m(universe);
    m.add(x);
    return m;
}

int SubsetMask::cardinality() const { return std::popcount(bits_); }

void SubsetMask::add(int x) {
    if (x < 0 || x >= n_) throw PreconditionError("element outside universe");
    bits_ |= std::uint64_t{1} << x;
}

void SubsetMask::remove(int x) {
    if (x < 0 || x >= n_) throw PreconditionError("element outside universe");
    bits_ &= ~(std::uint64_t{1} << x);
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
    if (n_ != other.n_) throw PreconditionError("universe mismatch");
    return (bits_ & ~other.bits_) == 0;
}

SubsetMask SubsetMask::intersect(const SubsetMask& other) const {
    if (n_ != other.n_) throw PreconditionError("universe mismatch");
    return SubsetMask(n_, bits_ & other.bits_);
}

SubsetMask SubsetMask::unite(const SubsetMask& other) const {
    if (n_ != other.n_) throw PreconditionError("universe mismatch");
    return SubsetMask(n_, bits_ | other.bits_);
}

bool SubsetMask::is_full() const { return bits_ == universe_mask(n_); }

std::vector<int> SubsetMask::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (int i = 0; i < n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string SubsetMask::to_string(const std::vector<std::string>& symbols) const {
    std::string out;
    for (int i : members()) {
        if (!out.empty()) out += ' ';
        out += symbols[i];
    }
    return out;
}

SubsetMask SubsetMask::parse(const std::string& text, const std::vector<std::string>& symbols) {
    SubsetMask m(static_cast<int>(symbols.size()));
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        int idx = -1;
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (symbols[i] == token) {
                idx = static_cast<int>(i);
                break;
            }
        }
        if (idx < 0) throw PreconditionError("unknown symbol '" + token + "' in subset");
        m.add(idx);
    }
    return m;
}

}  // namespace qg
