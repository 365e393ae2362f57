// Exhaustive enumeration of candidate maps over T up to geometric
// isomorphism.
//
// Every candidate map contains at least one type-1 orbit, so the search
// seeds with a representative of each type-1 symbol class and extends with
// entry-disjoint type-1 symbols (all of them, not just class
// representatives; no same-class pruning is applied). Type-2 orbits are
// forced: each non-involution entry whose inverse is absent contributes its
// inverse as a singleton. Surviving sets are deduplicated by canonical form.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "vtpoly/admissibility.hpp"
#include "vtpoly/candidate_map.hpp"
#include "vtpoly/geomiso.hpp"
#include "vtpoly/symbol.hpp"

namespace vtpoly {

struct MapClass {
    std::vector<OrbitSymbol> representative;  // canonical form
    MapSummary summary;
    std::vector<int> local_rotation;
};

struct EnumerationFilters {
    bool tucker = false;
    bool schewe = false;
    int min_genus = 0;
};

inline std::vector<OrbitSymbol> missing_inverse_fills(
    const std::vector<OrbitSymbol>& type1) {
    const auto& t = tetra();
    std::set<int> entries;
    for (const auto& s : type1)
        for (int i = 0; i < s.size(); ++i) entries.insert(s.entry(i));
    std::vector<OrbitSymbol> fills;
    for (int e : entries) {
        if (!t.is_involution(e) && !entries.count(t.inverse(e))) {
            fills.push_back(make_type2(t.inverse(e)));
        }
    }
    return fills;
}

inline std::vector<MapClass> enumerate_candidate_maps(
    const EnumerationFilters& filters = {}) {
    const auto type1 = all_type1_symbols();

    // Seeds: one representative per type-1 symbol class (canonical-least
    // member). The Klein triples have no class and never chain anyway.
    std::vector<OrbitSymbol> seeds;
    for (const auto& cls :
         {FaceOrbitClass::all_order_three, FaceOrbitClass::one_involution}) {
        std::optional<OrbitSymbol> best;
        for (const auto& s : type1) {
            if (involution_count(s) == 3) continue;
            if (classify_face_orbit(s) != cls) continue;
            const auto members = symbol_class_members(s);
            if (!best || members.front() < *best) best = members.front();
        }
        seeds.push_back(*best);
    }

    std::map<std::vector<OrbitSymbol>, CandidateMap> found;
    const auto try_accept = [&](const std::vector<OrbitSymbol>& chosen) {
        auto symbols = chosen;
        const auto fills = missing_inverse_fills(chosen);
        symbols.insert(symbols.end(), fills.begin(), fills.end());
        if (!circuit_property(symbols) || !connectedness_property(symbols)) return;
        auto canonical = canonical_map_form(symbols);
        if (found.count(canonical)) return;
        auto map = CandidateMap::build(canonical);
        found.emplace(std::move(canonical), std::move(map));
    };

    const auto disjoint = [](const OrbitSymbol& s, const std::set<int>& used) {
        for (int i = 0; i < s.size(); ++i)
            if (used.count(s.entry(i))) return false;
        return true;
    };

    std::vector<OrbitSymbol> chosen;
    std::set<int> used;
    const auto extend = [&](auto&& self, std::size_t from) -> void {
        try_accept(chosen);
        for (std::size_t i = from; i < type1.size(); ++i) {
            if (!disjoint(type1[i], used)) continue;
            chosen.push_back(type1[i]);
            for (int k = 0; k < 3; ++k) used.insert(type1[i].entry(k));
            self(self, i + 1);
            for (int k = 0; k < 3; ++k) used.erase(type1[i].entry(k));
            chosen.pop_back();
        }
    };
    for (const auto& seed : seeds) {
        chosen = {seed};
        used.clear();
        for (int k = 0; k < 3; ++k) used.insert(seed.entry(k));
        extend(extend, 0);
    }

    std::vector<MapClass> out;
    for (const auto& [canonical, map] : found) {
        const auto s = map.summary();
        if (filters.tucker && !tucker_admissible(GroupKind::tetrahedral, s.genus))
            continue;
        if (filters.schewe && !schewe_filter(s)) continue;
        if (s.genus < filters.min_genus) continue;
        out.push_back({canonical, s, map.local_rotation()});
    }
    return out;  // map iteration order == canonical forms sorted
}

}  // namespace vtpoly
