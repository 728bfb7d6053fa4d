#include "qg/softset.hpp"

#include <sstream>

namespace qg {
namespace {

void require_same_universe(const SoftSet& f, const SoftSet& g) {
    if (f.universe != g.universe)
        throw PreconditionError("soft sets live over different universes (" +
                                std::to_string(f.universe) + " vs " +
                                std::to_string(g.universe) + ")");
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

}  // namespace

int SoftSet::param_index(std::string_view name) const {
    for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i] == name) return static_cast<int>(i);
    return -1;
}

SoftSet parse_softset(std::string_view text, const CayleyTable& table) {
    SoftSet soft;
    soft.universe = table.n;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, "expected '<param>: <symbols>'");
        std::string param = trim(line.substr(0, colon));
        if (param.empty()) throw ParseError(line_no, "empty parameter name");
        if (soft.param_index(param) >= 0)
            throw ParseError(line_no, "duplicate parameter '" + param + "'");

        SubsetMask value(table.n);
        std::istringstream rest(line.substr(colon + 1));
        std::string token;
        while (rest >> token) {
            int idx = table.symbol_index(token);
            if (idx < 0) throw ParseError(line_no, "unknown symbol '" + token + "'");
            value.add(idx);
        }
        if (value.empty())
            throw ParseError(line_no, "parameter '" + param + "' has an empty value");
        soft.params.push_back(std::move(param));
        soft.values.push_back(value);
    }
    if (soft.params.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no parameters found");
    return soft;
}

std::string emit_softset(const SoftSet& soft, const CayleyTable& table) {
    std::string out;
    for (int i = 0; i < soft.param_count(); ++i) {
        out += soft.params[i];
        out += ": ";
        out += soft.values[i].to_string(table.symbols);
        out += '\n';
    }
    return out;
}

bool soft_subset(const SoftSet& f, const SoftSet& g) {
    require_same_universe(f, g);
    for (int i = 0; i < f.param_count(); ++i) {
        int j = g.param_index(f.params[i]);
        if (j < 0) return false;
        if (!f.values[i].subset_of(g.values[j])) return false;
    }
    return true;
}

bool soft_equal(const SoftSet& f, const SoftSet& g) {
    return soft_subset(f, g) && soft_subset(g, f);
}

SoftSetOpResult restricted_intersection(const SoftSet& f, const SoftSet& g, bool strict) {
    require_same_universe(f, g);
    SoftSetOpResult result;
    result.set.universe = f.universe;
    bool any_shared = false;
    for (int i = 0; i < f.param_count(); ++i) {
        int j = g.param_index(f.params[i]);
        if (j < 0) continue;
        any_shared = true;
        SubsetMask v = f.values[i].intersect(g.values[j]);
        if (v.empty()) {
            if (strict)
                throw PreconditionError("parameter '" + f.params[i] +
                                        "' intersects to the empty set");
            result.dropped.push_back(f.params[i]);
            continue;
        }
        result.set.params.push_back(f.params[i]);
        result.set.values.push_back(v);
    }
    if (!any_shared) throw PreconditionError("parameter sets are disjoint");
    if (result.set.params.empty())
        throw PreconditionError("restricted intersection is empty: every shared parameter "
                                "intersects to the empty set");
    return result;
}

SoftSetOpResult extended_intersection(const SoftSet& f, const SoftSet& g, bool strict) {
    require_same_universe(f, g);
    SoftSetOpResult result;
    result.set.universe = f.universe;
    for (int i = 0; i < f.param_count(); ++i) {
        int j = g.param_index(f.params[i]);
        if (j < 0) {
            result.set.params.push_back(f.params[i]);
            result.set.values.push_back(f.values[i]);
        } else {
            SubsetMask v = f.values[i].intersect(g.values[j]);
            if (v.empty()) {
                if (strict)
                    throw PreconditionError("parameter '" + f.params[i] +
                                            "' intersects to the empty set");
                result.dropped.push_back(f.params[i]);
                continue;
            }
            result.set.params.push_back(f.params[i]);
            result.set.values.push_back(v);
        }
    }
    for (int j = 0; j < g.param_count(); ++j) {
        if (f.param_index(g.params[j]) >= 0) continue;
        result.set.params.push_back(g.params[j]);
        result.set.values.push_back(g.values[j]);
    }
    return result;
}

SoftSet extended_union(const SoftSet& f, const SoftSet& g) {
    require_same_universe(f, g);
    SoftSet out;
    out.universe = f.universe;
    for (int i = 0; i < f.param_count(); ++i) {
        int j = g.param_index(f.params[i]);
        out.params.push_back(f.params[i]);
        out.values.push_back(j < 0 ? f.values[i] : f.values[i].unite(g.values[j]));
    }
    for (int j = 0; j < g.param_count(); ++j) {
        if (f.param_index(g.params[j]) >= 0) continue;
        out.params.push_back(g.params[j]);
        out.values.push_back(g.values[j]);
    }
    return out;
}

}  // namespace qg
