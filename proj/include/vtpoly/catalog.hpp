// The four admissible tetrahedral candidate maps in their customary labeling
// M0..M3 (genus 0, 3, 3, 6). M0 is the map of the snub tetrahedron, M1 the
// realizable genus-3 map, M2 its edge-flipped twin, M3 the genus-6 map.
#pragma once

#include <vector>

#include "vtpoly/symbol.hpp"

namespace vtpoly {
namespace catalog {

inline std::vector<OrbitSymbol> m0_symbols() {
    using namespace elem;
    return {make_type1(Y1, Y4, I1), make_type2(Y1i), make_type2(Y4i)};
}

inline std::vector<OrbitSymbol> m1_symbols() {
    using namespace elem;
    return {make_type1(Y1, Y4, I1), make_type1(Y3i, Y1i, I3), make_type2(Y4i),
            make_type2(Y3)};
}

inline std::vector<OrbitSymbol> m2_symbols() {
    using namespace elem;
    return {make_type1(Y1, Y4, I1), make_type1(Y1i, Y3i, I2), make_type2(Y4i),
            make_type2(Y3)};
}

inline std::vector<OrbitSymbol> m3_symbols() {
    using namespace elem;
    return {make_type1(Y1, Y4, I1), make_type1(Y1i, I2, Y2i),
            make_type1(Y2, Y3i, I3), make_type2(Y4i), make_type2(Y3)};
}

}  // namespace catalog
}  // namespace vtpoly
