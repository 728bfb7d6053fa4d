#include "qg/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qg {
namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

Partition partition_of(UnionFind& uf, int n) {
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
    return Partition::from_block_of(std::move(raw));
}

}  // namespace

Partition Partition::discrete(int n) {
    Partition p;
    p.n = n;
    p.block_of.resize(n);
    std::iota(p.block_of.begin(), p.block_of.end(), 0);
    p.block_count = n;
    return p;
}

Partition Partition::one_block(int n) {
    Partition p;
    p.n = n;
    p.block_of.assign(n, 0);
    p.block_count = 1;
    return p;
}

Partition Partition::from_block_of(std::vector<int> raw) {
    Partition p;
    p.n = static_cast<int>(raw.size());
    p.block_of.assign(p.n, -1);
    std::map<int, int> renumber;
    for (int i = 0; i < p.n; ++i) {
        auto [it, inserted] = renumber.try_emplace(raw[i], static_cast<int>(renumber.size()));
        p.block_of[i] = it->second;
    }
    p.block_count = static_cast<int>(renumber.size());
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) {
            if (x < 0 || x >= n) throw PreconditionError("partition element outside carrier");
            if (raw[x] != -1) throw PreconditionError("partition blocks overlap");
            raw[x] = static_cast<int>(b);
        }
    for (int x = 0; x < n; ++x)
        if (raw[x] == -1) throw PreconditionError("partition does not cover the carrier");
    return from_block_of(std::move(raw));
}

std::vector<SubsetMask> Partition::blocks() const {
    std::vector<SubsetMask> out(block_count, SubsetMask(n));
    for (int x = 0; x < n; ++x) out[block_of[x]].add(x);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (n != coarser.n) throw PreconditionError("partition size mismatch");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (same_block(a, b) && !coarser.same_block(a, b)) return false;
    return true;
}

std::string format_partition(const Partition& p, const std::vector<std::string>& symbols) {
    std::string out;
    for (const auto& block : p.blocks()) {
        out += "({";
        out += block.to_string(symbols);
        out += "})";
    }
    return out;
}

bool is_normal_congruence(const Quasigroup& q, const Partition& p) {
    const int n = q.size();
    if (p.n != n) throw PreconditionError("partition size does not match carrier");
    // 1, 2: translated pairs glued only if the originals are
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (p.same_block(q.mul(c, a), q.mul(c, b)) && !p.same_block(a, b)) return false;
                if (p.same_block(q.mul(a, c), q.mul(b, c)) && !p.same_block(a, b)) return false;
            }
    // 3: products of glued pairs glued
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.same_block(a, b)) continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!p.same_block(c, d)) continue;
                    if (!p.same_block(q.mul(a, c), q.mul(b, d))) return false;
                }
        }
    return true;
}

Partition generated_normal_congruence(const Quasigroup& q,
                                      std::span<const std::pair<int, int>> pairs) {
    const int n = q.size();
    UnionFind uf(n);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw PreconditionError("pair element outside carrier");
        uf.unite(a, b);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        // close under products of glued pairs
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (uf.find(a) != uf.find(b)) continue;
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        if (uf.find(c) != uf.find(d)) continue;
                        if (uf.unite(q.mul(a, c), q.mul(b, d))) changed = true;
                    }
            }
        // cancellation: glued translates force glued arguments
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (uf.find(q.mul(c, a)) == uf.find(q.mul(c, b)) && uf.unite(a, b))
                        changed = true;
                    if (uf.find(q.mul(a, c)) == uf.find(q.mul(b, c)) && uf.unite(a, b))
                        changed = true;
                }
    }
    return partition_of(uf, n);
}

std::vector<Partition> all_normal_congruences(const Quasigroup& q, int bound) {
    const int n = q.size();
    if (n > bound)
        throw BoundError("refusing to enumerate congruences of a carrier of size " +
                         std::to_string(n) + " (bound " + std::to_string(bound) + ")");

    // every normal congruence is a join of principal ones
    std::set<std::vector<int>> seen;
    std::vector<Partition> found;
    auto insert = [&](const Partition& p) {
        if (seen.insert(p.block_of).second) {
            found.push_back(p);
            return true;
        }
        return false;
    };

    insert(Partition::discrete(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::pair<int, int> pair{a, b};
            insert(generated_normal_congruence(q, std::span(&pair, 1)));
        }

    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = found.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) {
                // join: regenerate from the union of both gluings
                std::vector<std::pair<int, int>> pairs;
                for (const Partition* p : {&found[i], &found[j]})
                    for (int x = 0; x < n; ++x)
                        for (int y = x + 1; y < n; ++y)
                            if (p->same_block(x, y)) pairs.emplace_back(x, y);
                if (insert(generated_normal_congruence(q, pairs))) grew = true;
            }
    }

    std::sort(found.begin(), found.end(), [](const Partition& a, const Partition& b) {
        if (a.block_count != b.block_count) return a.block_count > b.block_count;
        return a.block_of < b.block_of;
    });
    return found;
}

std::optional<Partition> is_normal_subquasigroup(const Quasigroup& q, const SubsetMask& subset) {
    if (subset.universe() != q.size())
        throw PreconditionError("subset universe does not match carrier size");
    if (subset.empty()) throw PreconditionError("empty subset rejected");
    {
        // inline subquasigroup precondition (avoids a header cycle)
        auto elems = subset.members();
        for (int x : elems)
            for (int y : elems)
                for (OpKind kind : {OpKind::mul, OpKind::ldiv, OpKind::rdiv})
                    if (!subset.contains(q.evaluate(kind, x, y)))
                        throw PreconditionError("subset is not a subquasigroup");
    }

    auto elems = subset.members();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 1; i < elems.size(); ++i) pairs.emplace_back(elems[0], elems[i]);
    Partition theta = generated_normal_congruence(q, pairs);

    // the least congruence gluing the subset: it is normal iff the block did
    // not grow past the subset
    SubsetMask block(q.size());
    for (int x = 0; x < q.size(); ++x)
        if (theta.same_block(x, elems[0])) block.add(x);
    if (block == subset) return theta;
    return std::nullopt;
}

Quasigroup quotient(const Quasigroup& q, const Partition& congruence) {
    const int n = q.size();
    if (congruence.n != n) throw PreconditionError("partition size does not match carrier");
    if (!is_normal_congruence(q, congruence))
        throw PreconditionError("partition is not a normal congruence");

    const int k = congruence.block_count;
    auto blocks = congruence.blocks();

    CayleyTable t;
    t.n = k;
    for (const auto& block : blocks)
        t.symbols.push_back("[" + q.symbols()[block.members().front()] + "]");
    t.cells.assign(k, std::vector<int>(k, -1));

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int& cell = t.cells[congruence.block_of[a]][congruence.block_of[b]];
            int product_block = congruence.block_of[q.mul(a, b)];
            if (cell == -1)
                cell = product_block;
            else if (cell != product_block)
                throw PreconditionError("quotient is not well defined: congruence is broken");
        }
    return Quasigroup::validate(std::move(t), q.op_kind());
}

}  // namespace qg
