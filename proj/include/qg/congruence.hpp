#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qg/quasigroup.hpp"
#include "qg/subset.hpp"

namespace qg {

// A partition of {0..n-1} in normalized form: block ids are assigned in
// order of each block's least element, so equal partitions have equal
// representations.
struct Partition {
    int n = 0;
    std::vector<int> block_of;  // element -> block id
    int block_count = 0;

    static Partition discrete(int n);                         // Δ
    static Partition one_block(int n);                        // ∇
    static Partition from_block_of(std::vector<int> raw);     // normalizes
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    bool same_block(int a, int b) const { return block_of[a] == block_of[b]; }
    std::vector<SubsetMask> blocks() const;  // ordered by block id
    // Every block of *this lies inside a block of `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

// "({a b c})({d e})" with members in ascending order, blocks by id.
std::string format_partition(const Partition& p, const std::vector<std::string>& symbols);

// The three conditions of a normal congruence, checked exhaustively:
//   1. c*a θ c*b  implies  a θ b
//   2. a*c θ b*c  implies  a θ b
//   3. a θ b and c θ d  imply  a*c θ b*d
bool is_normal_congruence(const Quasigroup& q, const Partition& p);

// Smallest normal congruence gluing every given pair: union-find closed
// under the three conditions until fixpoint. Always terminates (each round
// strictly coarsens); worst case the one-block partition.
Partition generated_normal_congruence(const Quasigroup& q,
                                      std::span<const std::pair<int, int>> pairs);

// Every normal congruence, via join-closure of the principal congruences.
// Sorted finest-first: (block_count descending, block_of lexicographic).
// Refuses carriers larger than `bound`.
std::vector<Partition> all_normal_congruences(const Quasigroup& q, int bound = 12);

// For a subquasigroup H: the generated congruence θ_H gluing all of H.
// Any normal congruence with H as a class contains θ_H, so H is normal
// exactly when H is still a block of θ_H; returns that witness, or nothing
// when the block grew past H.
std::optional<Partition> is_normal_subquasigroup(const Quasigroup& q, const SubsetMask& subset);

// Quotient table on the blocks of a normal congruence: [a]*[b] = [a*b].
// Well-definedness is re-checked cell by cell and a broken input throws.
// Block symbols are "[s]" where s is the block's least member's symbol.
Quasigroup quotient(const Quasigroup& q, const Partition& congruence);

}  // namespace qg
