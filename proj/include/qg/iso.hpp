#pragma once

#include <optional>

#include "qg/quasigroup.hpp"

namespace qg {

// Exhaustive isomorphism search: a bijection f with f(x*y) = f(x)∘f(y), or
// definitive absence. Candidate images are pruned by conjugation-invariant
// signatures (idempotency, translation cycle types). Size mismatch is
// definitive absence; carriers above `bound` are refused.
std::optional<Permutation> are_isomorphic(const Quasigroup& a, const Quasigroup& b,
                                          int bound = 12);

// Checks f(x*y) = f(x)∘f(y) over all pairs.
bool is_isomorphism(const Quasigroup& a, const Quasigroup& b, const Permutation& f);

}  // namespace qg
