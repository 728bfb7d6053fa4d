#include "qg/iso.hpp"

#include <algorithm>
#include <set>

namespace qg {
namespace {

// Conjugation-invariant element signature: idempotency plus the cycle types
// of both translations.
struct Signature {
    bool idempotent;
    std::vector<int> left_cycles;
    std::vector<int> right_cycles;

    auto operator<=>(const Signature&) const = default;
};

Signature signature_of(const Quasigroup& q, int x) {
    return Signature{q.mul(x, x) == x, q.translation(x, Side::left).cycle_type(),
                     q.translation(x, Side::right).cycle_type()};
}

struct Search {
    const Quasigroup& a;
    const Quasigroup& b;
    int n;
    std::vector<Signature> sig_a, sig_b;
    std::vector<int> image;  // a -> b, -1 unassigned
    std::vector<bool> used;  // elements of b already taken

    bool consistent(int k) const {
        // all products among assigned elements must map correctly
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                int p = a.mul(i, j);
                int q = b.mul(image[i], image[j]);
                if (p <= k) {
                    if (image[p] != q) return false;
                } else if (used[q]) {
                    return false;  // q is taken by an element other than p
                }
            }
        return true;
    }

    bool extend(int k) {
        if (k == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || sig_a[k] != sig_b[v]) continue;
            image[k] = v;
            used[v] = true;
            if (consistent(k) && extend(k + 1)) return true;
            used[v] = false;
            image[k] = -1;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphism(const Quasigroup& a, const Quasigroup& b, const Permutation& f) {
    if (a.size() != b.size() || f.degree() != a.size() || !f.is_bijection()) return false;
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (f.apply(a.mul(x, y)) != b.mul(f.apply(x), f.apply(y))) return false;
    return true;
}

std::optional<Permutation> are_isomorphic(const Quasigroup& a, const Quasigroup& b, int bound) {
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.size();
    if (n > bound)
        throw BoundError("refusing isomorphism search on carriers of size " +
                         std::to_string(n) + " (bound " + std::to_string(bound) + ")");

    Search s{a, b, n, {}, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
    std::multiset<Signature> multiset_a, multiset_b;
    for (int x = 0; x < n; ++x) {
        s.sig_a.push_back(signature_of(a, x));
        s.sig_b.push_back(signature_of(b, x));
        multiset_a.insert(s.sig_a.back());
        multiset_b.insert(s.sig_b.back());
    }
    if (multiset_a != multiset_b) return std::nullopt;

    if (!s.extend(0)) return std::nullopt;
    Permutation f{std::move(s.image)};
    return f;
}

}  // namespace qg
