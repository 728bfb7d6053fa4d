#include "qg/kinds.hpp"

#include <array>

namespace qg {
namespace {

// How each kind rearranges a base triple (x, y, x*y): out[i] = in[perm[i]].
constexpr std::array<std::array<int, 3>, 6> kind_perm = {{
    {0, 1, 2},  // mul
    {1, 0, 2},  // opp
    {2, 1, 0},  // rdiv
    {0, 2, 1},  // ldiv
    {1, 2, 0},  // ordiv
    {2, 0, 1},  // oldiv
}};

OpKind kind_from_perm(const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < kind_perm.size(); ++i) {
        if (kind_perm[i] == p) return static_cast<OpKind>(i);
    }
    return OpKind::mul;  // unreachable: kind_perm covers all of S_3
}

}  // namespace

std::optional<OpKind> op_kind_from_string(std::string_view name) {
    for (OpKind k : all_op_kinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

OpKind compose(OpKind outer, OpKind inner) {
    const auto& po = kind_perm[static_cast<int>(outer)];
    const auto& pi = kind_perm[static_cast<int>(inner)];
    std::array<int, 3> composed{};
    for (int i = 0; i < 3; ++i) composed[i] = pi[po[i]];
    return kind_from_perm(composed);
}

OpKind inverse_kind(OpKind k) {
    const auto& p = kind_perm[static_cast<int>(k)];
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[p[i]] = i;
    return kind_from_perm(inv);
}

}  // namespace qg
