// Candidate maps: the labeled polyhedral map a set of orbit symbols spans on
// the vertex set indexed by the 12 group elements. Construction checks the
// three defining conditions (no repeated core rotation, circuit property,
// connectedness) and then asserts polyhedrality of the resulting cell
// complex instead of assuming it.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vtpoly/error.hpp"
#include "vtpoly/group.hpp"
#include "vtpoly/symbol.hpp"

namespace vtpoly {

struct MapSummary {
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
    int genus = 0;
    int schlafli_vertex_degree = 0;
};

// Oriented combinatorial angle: labels of the incoming and outgoing darts of
// one face at the initial vertex.
struct Angle {
    int in;
    int out;
    auto operator<=>(const Angle&) const = default;
};

inline std::vector<Angle> symbol_angles(const std::vector<OrbitSymbol>& symbols) {
    std::vector<Angle> out;
    for (const auto& s : symbols) {
        if (s.kind == SymbolKind::type2) {
            out.push_back({s.entry(0), s.entry(0)});
        } else {
            out.push_back({s.entry(0), s.entry(1)});
            out.push_back({s.entry(1), s.entry(2)});
            out.push_back({s.entry(2), s.entry(0)});
        }
    }
    return out;
}

inline bool entries_pairwise_distinct(const std::vector<OrbitSymbol>& symbols) {
    std::set<int> seen;
    for (const auto& s : symbols)
        for (int i = 0; i < s.size(); ++i)
            if (!seen.insert(s.entry(i)).second) return false;
    return true;
}

// Chains the angles by the successor rule "(g3,g4) follows (g1,g2) iff
// g3 = g2^-1". Returns the induced local rotation (cyclic sequence of
// outgoing dart labels) iff the angles form one single circuit.
// The start is the least angle, which fixes the phase deterministically.
inline std::optional<std::vector<int>> circuit_property(
    const std::vector<OrbitSymbol>& symbols) {
    const auto& t = tetra();
    const auto angles = symbol_angles(symbols);
    if (angles.empty()) return std::nullopt;
    std::array<int, TetrahedralGroup::kOrder> by_first;
    by_first.fill(-1);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (by_first[angles[i].in] != -1) return std::nullopt;  // condition 1 broken
        by_first[angles[i].in] = static_cast<int>(i);
    }
    const auto start =
        static_cast<std::size_t>(std::min_element(angles.begin(), angles.end()) -
                                 angles.begin());
    std::vector<int> rotation;
    std::size_t cur = start;
    do {
        rotation.push_back(angles[cur].out);
        const int next = by_first[t.inverse(angles[cur].out)];
        if (next < 0) return std::nullopt;
        cur = static_cast<std::size_t>(next);
    } while (cur != start);
    if (rotation.size() != angles.size()) return std::nullopt;
    return rotation;
}

// True iff the symbol entries generate all of T.
inline bool connectedness_property(const std::vector<OrbitSymbol>& symbols) {
    const auto& t = tetra();
    std::set<int> gens;
    for (const auto& s : symbols)
        for (int i = 0; i < s.size(); ++i) gens.insert(s.entry(i));
    std::vector<int> frontier{elem::id};
    std::array<bool, TetrahedralGroup::kOrder> reached{};
    reached[elem::id] = true;
    int count = 1;
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (int g : gens) {
            const int y = t.multiply(x, g);
            if (!reached[y]) {
                reached[y] = true;
                ++count;
                frontier.push_back(y);
            }
        }
    }
    return count == TetrahedralGroup::kOrder;
}

// A fully explicit candidate map. Vertices are group element indices; a dart
// is an ordered vertex pair (tail, head) whose label is forced to be
// tail^-1 * head; faces are oriented boundary walks.
class CandidateMap {
public:
    struct Face {
        std::array<int, 3> walk;       // vertex indices, oriented
        int symbol;                    // index into symbols()
    };

    static CandidateMap build(std::vector<OrbitSymbol> symbols) {
        const auto& t = tetra();
        for (auto& s : symbols) s = cyclic_normal_form(s);
        std::sort(symbols.begin(), symbols.end());
        if (symbols.empty()) {
            raise(Errc::invalid_symbol_set, "empty symbol set");
        }
        if (!entries_pairwise_distinct(symbols)) {
            raise(Errc::invalid_symbol_set,
                  "condition 1 fails: a core rotation repeats across symbols");
        }
        auto rotation = circuit_property(symbols);
        if (!rotation) {
            raise(Errc::invalid_symbol_set, "circuit property fails");
        }
        if (!connectedness_property(symbols)) {
            raise(Errc::invalid_symbol_set, "connectedness property fails");
        }

        CandidateMap m;
        m.symbols_ = std::move(symbols);
        m.local_rotation_ = std::move(*rotation);

        // One boundary walk per (symbol, h); walks repeating as cyclic vertex
        // sequences are identified.
        std::set<std::array<int, 3>> seen;
        for (std::size_t si = 0; si < m.symbols_.size(); ++si) {
            const auto& s = m.symbols_[si];
            for (int h = 0; h < TetrahedralGroup::kOrder; ++h) {
                std::array<int, 3> walk;
                if (s.kind == SymbolKind::type2) {
                    const int g = s.entry(0);
                    walk = {h, t.multiply(g, h), t.multiply(g, t.multiply(g, h))};
                } else {
                    walk = {h, t.multiply(s.entry(1), h),
                            t.multiply(t.inverse(s.entry(0)), h)};
                }
                if (seen.insert(rotate_min(walk)).second) {
                    m.faces_.push_back({rotate_min(walk), static_cast<int>(si)});
                }
            }
        }
        std::sort(m.faces_.begin(), m.faces_.end(),
                  [](const Face& a, const Face& b) { return a.walk < b.walk; });
        m.check_polyhedrality();
        return m;
    }

    const std::vector<OrbitSymbol>& symbols() const { return symbols_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<int>& local_rotation() const { return local_rotation_; }

    int vertex_count() const { return TetrahedralGroup::kOrder; }
    int dart_count() const { return 3 * static_cast<int>(faces_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int euler_characteristic() const {
        return vertex_count() - edge_count() + face_count();
    }
    int genus() const { return 1 - euler_characteristic() / 2; }
    int vertex_degree() const { return static_cast<int>(local_rotation_.size()); }

    MapSummary summary() const {
        return {vertex_count(), edge_count(), face_count(), genus(), vertex_degree()};
    }

    // Number of core-rotation occurrences across the symbols (= darts/12).
    int entry_occurrences() const {
        int k = 0;
        for (const auto& s : symbols_) k += s.size();
        return k;
    }

    // Undirected vertex index pairs shared by two faces.
    static std::vector<int> shared_vertices(const Face& a, const Face& b) {
        std::vector<int> out;
        for (int v : a.walk)
            if (std::find(b.walk.begin(), b.walk.end(), v) != b.walk.end())
                out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static std::array<int, 3> rotate_min(const std::array<int, 3>& w) {
        std::array<std::array<int, 3>, 3> rots{{{w[0], w[1], w[2]},
                                                {w[1], w[2], w[0]},
                                                {w[2], w[0], w[1]}}};
        return *std::min_element(rots.begin(), rots.end());
    }

    void check_polyhedrality() const {
        const auto& t = tetra();
        // Faces are simple and each dart lies in exactly one face; every dart
        // has its opposite; face orbits have the expected sizes; degrees are
        // uniform; the Euler characteristic is even and at most 2.
        std::set<std::pair<int, int>> darts;
        for (const auto& f : faces_) {
            if (f.walk[0] == f.walk[1] || f.walk[1] == f.walk[2] ||
                f.walk[0] == f.walk[2]) {
                raise(Errc::polyhedrality_violation, "face walk is not simple");
            }
            for (int i = 0; i < 3; ++i) {
                const int tail = f.walk[i], head = f.walk[(i + 1) % 3];
                if (!TetrahedralGroup::is_core(t.multiply(t.inverse(tail), head))) {
                    raise(Errc::polyhedrality_violation, "dart label is not core");
                }
                if (!darts.insert({tail, head}).second) {
                    raise(Errc::polyhedrality_violation,
                          "dart lies in two face boundaries");
                }
            }
        }
        for (const auto& [tail, head] : darts) {
            if (!darts.count({head, tail})) {
                raise(Errc::polyhedrality_violation, "dart has no opposite");
            }
        }
        std::array<int, TetrahedralGroup::kOrder> degree{};
        for (const auto& [tail, head] : darts) degree[tail]++;
        for (int d : degree) {
            if (d != degree[0]) {
                raise(Errc::polyhedrality_violation, "vertex degrees differ");
            }
        }
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            for (std::size_t j = i + 1; j < faces_.size(); ++j) {
                if (shared_vertices(faces_[i], faces_[j]).size() > 2) {
                    raise(Errc::polyhedrality_violation,
                          "two faces share more than one edge");
                }
            }
        }
        std::array<int, 16> orbit_sizes{};
        for (const auto& f : faces_) orbit_sizes[f.symbol]++;
        for (std::size_t si = 0; si < symbols_.size(); ++si) {
            const int want = symbols_[si].kind == SymbolKind::type1 ? 12 : 4;
            if (orbit_sizes[si] != want) {
                raise(Errc::polyhedrality_violation,
                      "face orbit " + to_string(symbols_[si]) + " has " +
                          std::to_string(orbit_sizes[si]) + " faces, expected " +
                          std::to_string(want));
            }
        }
        const int chi = euler_characteristic();
        if (chi % 2 != 0 || chi > 2) {
            raise(Errc::polyhedrality_violation, "Euler characteristic out of range");
        }
    }

    std::vector<OrbitSymbol> symbols_;
    std::vector<Face> faces_;
    std::vector<int> local_rotation_;
};

// Genus via the entry-count shortcut: 12 vertices, 6k edges, and the face
// count; must agree with CandidateMap::genus() on every constructible map.
inline int genus_shortcut(int entry_occurrences, int face_count) {
    return 1 - (TetrahedralGroup::kOrder - 6 * entry_occurrences + face_count) / 2;
}

}  // namespace vtpoly
