#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace qg {

// The six operations derivable from one quasigroup operation. `mul` is the
// base; the other five are its parastrophes:
//   opp    x y = y * x
//   rdiv   x y = z  with  z * y = x          (right division, /)
//   ldiv   x y = z  with  x * z = y          (left division, \)
//   ordiv  x y = y rdiv x                    (opposite right division, //)
//   oldiv  x y = y ldiv x                    (opposite left division, \\)
enum class OpKind { mul, opp, rdiv, ldiv, ordiv, oldiv };

inline constexpr std::array<OpKind, 6> all_op_kinds = {
    OpKind::mul, OpKind::opp, OpKind::rdiv, OpKind::ldiv, OpKind::ordiv, OpKind::oldiv};

constexpr std::string_view to_string(OpKind k) {
    switch (k) {
        case OpKind::mul: return "mul";
        case OpKind::opp: return "opp";
        case OpKind::rdiv: return "rdiv";
        case OpKind::ldiv: return "ldiv";
        case OpKind::ordiv: return "ordiv";
        case OpKind::oldiv: return "oldiv";
    }
    return "?";
}

std::optional<OpKind> op_kind_from_string(std::string_view name);

// Each kind rearranges the triples (x, y, x*y) of the base operation; the
// rearrangements form a copy of S_3, so deriving kind `outer` from a table
// that itself realizes `inner` lands on a single composite kind.
OpKind compose(OpKind outer, OpKind inner);

OpKind inverse_kind(OpKind k);

}  // namespace qg
