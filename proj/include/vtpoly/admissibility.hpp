// Genus admissibility filters: the Heawood vertex bound, Tucker's
// rotational-symmetry condition, and Schewe's exclusion of genus 6 on 12
// vertices.
#pragma once

#include "vtpoly/candidate_map.hpp"
#include "vtpoly/error.hpp"

namespace vtpoly {

enum class GroupKind { tetrahedral, octahedral, icosahedral };

// ceil((7 + sqrt(1 + 48g)) / 2): least m with (2m-7)^2 >= 1+48g.
inline int heawood_bound_raw(int genus) {
    const long long x = 1 + 48LL * genus;
    int m = 4;
    while (static_cast<long long>(2 * m - 7) * (2 * m - 7) < x) ++m;
    return m;
}

// Raw Heawood bound, sharpened at genus 2 where the bound of 9 is known not
// to be attained (Ringel, Jungerman).
inline int heawood_min_vertices(int genus) {
    return genus == 2 ? 10 : heawood_bound_raw(genus);
}

// Tucker: the genera embeddable in E^3 with the given rotational Platonic
// symmetry are m1*a + m2*b (+ m3*c) plus a residue from a per-group set.
inline bool tucker_admissible(GroupKind kind, int genus) {
    struct Rule {
        std::array<int, 3> periods;
        std::array<int, 7> residues;
        int n_periods, n_residues;
    };
    static constexpr Rule kRules[] = {
        {{6, 8, 0}, {0, 3, 5, 7, 0, 0, 0}, 2, 4},
        {{12, 16, 18}, {0, 5, 7, 11, 13, 0, 0}, 3, 5},
        {{30, 40, 48}, {0, 11, 19, 21, 29, 31, 37}, 3, 7},
    };
    const Rule& rule = kRules[static_cast<int>(kind)];
    // Depth-first over multiples of each period.
    std::array<int, 3> m{};
    const auto residues_hit = [&](int remaining) {
        for (int i = 0; i < rule.n_residues; ++i)
            if (rule.residues[i] == remaining) return true;
        return false;
    };
    for (m[0] = 0; m[0] * rule.periods[0] <= genus; ++m[0]) {
        for (m[1] = 0; m[0] * rule.periods[0] + m[1] * rule.periods[1] <= genus;
             ++m[1]) {
            int base = m[0] * rule.periods[0] + m[1] * rule.periods[1];
            if (rule.n_periods == 2) {
                if (residues_hit(genus - base)) return true;
            } else {
                for (m[2] = 0; base + m[2] * rule.periods[2] <= genus; ++m[2]) {
                    if (residues_hit(genus - base - m[2] * rule.periods[2]))
                        return true;
                }
            }
        }
    }
    return false;
}

// Largest genus a triangulation on 12 vertices supports: |E| = 3*12 + 6(g-1)
// may not exceed C(12,2) = 66.
inline int max_genus_12_vertices() {
    int g = 0;
    while (3 * 12 + 6 * ((g + 1) - 1) <= 12 * 11 / 2) ++g;
    return g;
}

// Schewe: no polyhedral map of genus 6 exists on 12 vertices. False exactly
// for that combination.
inline bool schewe_filter(const MapSummary& s) {
    return !(s.genus == 6 && s.vertex_count == 12);
}

}  // namespace vtpoly
