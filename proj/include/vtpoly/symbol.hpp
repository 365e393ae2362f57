// Orbit symbols: the per-face-orbit encoding of a labeled map at the initial
// vertex. A type-1 symbol (g1,g2,g3) describes an orbit of trivially
// stabilized triangles and requires g3 = g1^-1 * g2^-1; a type-2 symbol (g)
// describes an orbit of faces stabilized by <g> and requires ord(g) > 2.
// Type-1 symbols are cyclic; the stored form is the lexicographically least
// rotation under the canonical element order.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "vtpoly/error.hpp"
#include "vtpoly/group.hpp"

namespace vtpoly {

enum class SymbolKind { type1, type2 };

struct OrbitSymbol {
    SymbolKind kind;
    std::array<int, 3> entries{};  // element indices; entries[1..2] unused for type2

    int size() const { return kind == SymbolKind::type1 ? 3 : 1; }
    int entry(int i) const { return entries[i]; }

    bool operator==(const OrbitSymbol&) const = default;

    // Type-1 symbols sort before type-2; within a kind, by entries.
    auto key() const {
        return std::make_tuple(kind == SymbolKind::type2, entries[0],
                               entries[1], entries[2]);
    }
    bool operator<(const OrbitSymbol& o) const { return key() < o.key(); }
};

inline OrbitSymbol cyclic_normal_form(const OrbitSymbol& s) {
    if (s.kind == SymbolKind::type2) return s;
    const auto& e = s.entries;
    std::array<std::array<int, 3>, 3> rots{{{e[0], e[1], e[2]},
                                            {e[1], e[2], e[0]},
                                            {e[2], e[0], e[1]}}};
    return {SymbolKind::type1, *std::min_element(rots.begin(), rots.end())};
}

inline bool cyclically_equal(const OrbitSymbol& a, const OrbitSymbol& b) {
    return cyclic_normal_form(a) == cyclic_normal_form(b);
}

// Validates entry names against the definition and returns the symbol in
// cyclic normal form.
inline OrbitSymbol validate_symbol(const std::vector<std::string>& names) {
    const auto& t = tetra();
    if (names.size() != 1 && names.size() != 3) {
        raise(Errc::malformed_symbol,
              "orbit symbol must have 1 or 3 entries, got " +
                  std::to_string(names.size()));
    }
    std::array<int, 3> e{};
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto idx = t.index_of_name(names[i]);
        if (!idx || !TetrahedralGroup::is_core(*idx)) {
            raise(Errc::not_core_rotation, "'" + names[i] + "' is not a core rotation");
        }
        e[i] = *idx;
    }
    if (names.size() == 1) {
        if (t.order(e[0]) <= 2) {
            raise(Errc::type2_order_two,
                  "type-2 symbol (" + names[0] + ") needs an element of order > 2");
        }
        return {SymbolKind::type2, {e[0], 0, 0}};
    }
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) {
        raise(Errc::repeated_entry, "orbit symbol entries must be distinct");
    }
    // g3 = g1^-1 * g2^-1, equivalently g2*g1*g3 = 1.
    if (t.multiply(t.inverse(e[0]), t.inverse(e[1])) != e[2]) {
        raise(Errc::product_not_identity,
              "(" + names[0] + "," + names[1] + "," + names[2] +
                  ") violates g3 = g1^-1*g2^-1");
    }
    return cyclic_normal_form({SymbolKind::type1, e});
}

inline OrbitSymbol make_type2(int g) {
    const auto& t = tetra();
    if (!TetrahedralGroup::is_core(g)) raise(Errc::not_core_rotation, "bad index");
    if (t.order(g) <= 2) raise(Errc::type2_order_two, "involution in type-2 symbol");
    return {SymbolKind::type2, {g, 0, 0}};
}

inline OrbitSymbol make_type1(int g1, int g2, int g3) {
    const auto& t = tetra();
    return validate_symbol({std::string(t.name(g1)), std::string(t.name(g2)),
                            std::string(t.name(g3))});
}

inline std::string to_string(const OrbitSymbol& s) {
    const auto& t = tetra();
    std::string out = "(";
    for (int i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += t.name(s.entry(i));
    }
    return out + ")";
}

// All valid type-1 symbols in cyclic normal form (34 for T: 8 without an
// involution, 24 with one, and the two Klein triples).
inline std::vector<OrbitSymbol> all_type1_symbols() {
    const auto& t = tetra();
    std::vector<OrbitSymbol> out;
    for (int a : TetrahedralGroup::core_rotations()) {
        for (int b : TetrahedralGroup::core_rotations()) {
            if (a == b) continue;
            const int c = t.multiply(t.inverse(a), t.inverse(b));
            if (c == elem::id || c == a || c == b) continue;
            const auto s = cyclic_normal_form({SymbolKind::type1, {a, b, c}});
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<OrbitSymbol> all_type2_symbols() {
    std::vector<OrbitSymbol> out;
    for (int g : TetrahedralGroup::core_rotations()) {
        if (tetra().order(g) > 2) out.push_back(make_type2(g));
    }
    return out;
}

inline int involution_count(const OrbitSymbol& s) {
    int n = 0;
    for (int i = 0; i < s.size(); ++i) n += tetra().is_involution(s.entry(i)) ? 1 : 0;
    return n;
}

}  // namespace vtpoly
