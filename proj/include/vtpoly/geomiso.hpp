// Geometric isomorphism: the action of the normalizer N_{O(3)}(T) on orbit
// symbols and symbol sets. An orientation-preserving element conjugates each
// entry; an orientation-reversing element additionally flips the face
// orientation, which on symbols reads
//     (g)          ->  ((g^-1)^A)
//     (g, h, g^-1 h^-1)  ->  ((hg)^A, (h^-1)^A, (g^-1)^A).
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "vtpoly/candidate_map.hpp"
#include "vtpoly/error.hpp"
#include "vtpoly/group.hpp"
#include "vtpoly/symbol.hpp"

namespace vtpoly {

inline OrbitSymbol transform_symbol(const OrbitSymbol& s, const Mat3& a) {
    const auto& t = tetra();
    if (!normalizer().contains(a)) {
        raise(Errc::not_in_normalizer, "matrix does not normalize the group");
    }
    const bool preserves = a.det() == 1;
    if (s.kind == SymbolKind::type2) {
        const int g = preserves ? s.entry(0) : t.inverse(s.entry(0));
        return {SymbolKind::type2, {t.conjugate_index(g, a), 0, 0}};
    }
    std::array<int, 3> e;
    if (preserves) {
        for (int i = 0; i < 3; ++i) e[i] = t.conjugate_index(s.entry(i), a);
    } else {
        const int g = s.entry(0), h = s.entry(1);
        e = {t.conjugate_index(t.multiply(h, g), a),
             t.conjugate_index(t.inverse(h), a),
             t.conjugate_index(t.inverse(g), a)};
    }
    return cyclic_normal_form({SymbolKind::type1, e});
}

inline std::vector<OrbitSymbol> transform_symbols(
    const std::vector<OrbitSymbol>& symbols, const Mat3& a) {
    std::vector<OrbitSymbol> out;
    out.reserve(symbols.size());
    for (const auto& s : symbols) out.push_back(transform_symbol(s, a));
    std::sort(out.begin(), out.end());
    return out;
}

// The three geometric isomorphism classes of connectable face orbits.
enum class FaceOrbitClass {
    stabilized,            // type 2, representative (Y1)
    all_order_three,       // type 1 without involution, repr. (Y4i,Y2i,Y3i)
    one_involution,        // type 1 with one involution, repr. (Y1,Y4,I1)
};

// A type-1 symbol with two involutions forces a third (the involutions form
// a Klein four group); such an orbit closes its angles among itself and can
// never join a candidate map.
inline FaceOrbitClass classify_face_orbit(const OrbitSymbol& s) {
    if (s.kind == SymbolKind::type2) return FaceOrbitClass::stabilized;
    switch (involution_count(s)) {
        case 0:
            return FaceOrbitClass::all_order_three;
        case 1:
            return FaceOrbitClass::one_involution;
        default:
            raise(Errc::unrealizable_orbit,
                  to_string(s) + " contains only involutions");
    }
}

inline std::vector<OrbitSymbol> symbol_class_members(const OrbitSymbol& s) {
    std::vector<OrbitSymbol> out;
    for (const auto& a : normalizer().elements()) {
        const auto img = transform_symbol(s, a);
        if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minimum of the sorted transformed symbol set over all 48 normalizer
// elements. Brute force; the group is tiny.
inline std::vector<OrbitSymbol> canonical_map_form(
    const std::vector<OrbitSymbol>& symbols) {
    std::optional<std::vector<OrbitSymbol>> best;
    for (const auto& a : normalizer().elements()) {
        auto img = transform_symbols(symbols, a);
        if (!best || img < *best) best = std::move(img);
    }
    return *best;
}

// Witness A in N with symbols(m1)^A == symbols(m2), if any.
inline std::optional<Mat3> maps_isomorphic(const std::vector<OrbitSymbol>& m1,
                                           const std::vector<OrbitSymbol>& m2) {
    std::vector<OrbitSymbol> target;
    for (const auto& s : m2) target.push_back(cyclic_normal_form(s));
    std::sort(target.begin(), target.end());
    for (const auto& a : normalizer().elements()) {
        if (transform_symbols(m1, a) == target) return a;
    }
    return std::nullopt;
}

inline std::optional<Mat3> maps_isomorphic(const CandidateMap& m1,
                                           const CandidateMap& m2) {
    return maps_isomorphic(m1.symbols(), m2.symbols());
}

}  // namespace vtpoly
