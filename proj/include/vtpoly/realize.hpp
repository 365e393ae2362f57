// Realization of a candidate map from a base vertex: the 12 vertex positions
// are the images of the base under the group, faces are the map's boundary
// walks, and a realization is embedded iff vertices are distinct, faces are
// honest triangles, and every face pair intersects in exactly the cell the
// map says they share.
//
// Also houses the region/case infeasibility analysis for the second genus-3
// map (M2): four regions cover all base vertices, each region forcing a
// named self-intersection event that the exact predicates of geometry.hpp
// can confirm independently.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "vtpoly/candidate_map.hpp"
#include "vtpoly/catalog.hpp"
#include "vtpoly/error.hpp"
#include "vtpoly/geometry.hpp"
#include "vtpoly/group.hpp"

namespace vtpoly {

struct Realization {
    CandidateMap map;
    Vec3 base;
    std::array<Vec3, TetrahedralGroup::kOrder> positions;

    Triangle triangle(int face) const {
        const auto& w = map.faces()[face].walk;
        return {positions[w[0]], positions[w[1]], positions[w[2]]};
    }
};

inline Realization place_vertices(const CandidateMap& map, const Vec3& base) {
    if (base.is_zero()) raise(Errc::zero_vector, "base vertex must be nonzero");
    Realization r{map, base, {}};
    for (int h = 0; h < TetrahedralGroup::kOrder; ++h) {
        r.positions[h] = apply(base, tetra().element(h));
    }
    return r;
}

struct CoincidentVertices {
    int h1, h2;  // group element indices
};
struct DegenerateFace {
    int face;
};
struct FaceIntersection {
    int face1, face2;
    TriangleIntersectionClass found;
};
using FailureWitness =
    std::variant<std::monostate, CoincidentVertices, DegenerateFace, FaceIntersection>;

struct RealizationReport {
    enum class Verdict { embedded, failed };
    Verdict verdict = Verdict::failed;
    MapSummary summary;
    FailureWitness witness;

    bool embedded() const { return verdict == Verdict::embedded; }
};

// Checks, in order: distinct vertices, non-degenerate faces, then every
// unordered face pair against the incidence-expected intersection class.
// The first failure wins.
inline RealizationReport verify_realization(const CandidateMap& map,
                                            const Vec3& base) {
    RealizationReport report;
    report.summary = map.summary();
    const Realization r = place_vertices(map, base);
    for (int i = 0; i < TetrahedralGroup::kOrder; ++i) {
        for (int j = i + 1; j < TetrahedralGroup::kOrder; ++j) {
            if (r.positions[i] == r.positions[j]) {
                report.witness = CoincidentVertices{i, j};
                return report;
            }
        }
    }
    const int nf = map.face_count();
    std::vector<Triangle> tris;
    tris.reserve(nf);
    for (int f = 0; f < nf; ++f) {
        tris.push_back(r.triangle(f));
        if (triangle_degenerate(tris.back())) {
            report.witness = DegenerateFace{f};
            return report;
        }
    }
    for (int i = 0; i < nf; ++i) {
        for (int j = i + 1; j < nf; ++j) {
            const auto shared =
                CandidateMap::shared_vertices(map.faces()[i], map.faces()[j]);
            TriangleIntersectionClass want;
            switch (shared.size()) {
                case 0: want = TriangleIntersectionClass::disjoint; break;
                case 1: want = TriangleIntersectionClass::shared_vertex_only; break;
                default: want = TriangleIntersectionClass::shared_edge_only; break;
            }
            const auto found = triangle_intersection_class(tris[i], tris[j]);
            if (found != want) {
                report.witness = FaceIntersection{i, j, found};
                return report;
            }
        }
    }
    report.verdict = RealizationReport::Verdict::embedded;
    return report;
}

// ---------------------------------------------------------------------------
// M2 infeasibility case analysis.

enum class M2Region { r1, r2, r3, r4, boundary };
enum class M2Case { c1, c2, c3, c4, c5 };

inline const char* to_string(M2Region r) {
    switch (r) {
        case M2Region::r1: return "R1";
        case M2Region::r2: return "R2";
        case M2Region::r3: return "R3";
        case M2Region::r4: return "R4";
        case M2Region::boundary: return "boundary";
    }
    return "?";
}
inline const char* to_string(M2Case c) {
    switch (c) {
        case M2Case::c1: return "C1";
        case M2Case::c2: return "C2";
        case M2Case::c3: return "C3";
        case M2Case::c4: return "C4";
        case M2Case::c5: return "C5";
    }
    return "?";
}

// The four triangles of the analysis, generated from the base by the group
// action exactly as they occur as faces of M2.
inline Triangle m2_delta1(const Vec3& v) {
    const auto& t = tetra();
    return {v, apply(v, t.element(elem::Y3)),
            apply(apply(v, t.element(elem::Y3)), t.element(elem::Y3))};
}
inline Triangle m2_delta2(const Vec3& v) {
    const auto& t = tetra();
    return {v, apply(v, t.element(elem::Y4i)), apply(v, t.element(elem::Y4))};
}
inline Triangle m2_delta3(const Vec3& v) {
    const auto& t = tetra();
    return {v, apply(v, t.element(elem::Y4)), apply(v, t.element(elem::Y1i))};
}
inline Triangle m2_delta4(const Vec3& v) {
    const auto& t = tetra();
    return {v, apply(v, t.element(elem::Y3i)), apply(v, t.element(elem::Y1))};
}

// Symbolic determinant values of the case analysis, as polynomials in the
// base coordinates. Axis rows used by the case determinants: (0,0,1) for
// cases 1-2, (1,-1,1) for case 3, (-1,1,1) for case 4.
struct M2Determinants {
    Rational r1_expr;   // c^2 + ab   (region 1 when < 0)
    Rational r2a, r2b;  // a^2 + bc, b^2 + ac   (region 2 when both < 0)
    Rational r3a, r3b;  // a^2 - bc, b^2 - ac   (region 3 when both < 0)
    std::array<Rational, 3> case1, case2, case3, case4;
    std::array<Rational, 4> region3;  // separation determinants, factored form
};

inline M2Determinants m2_determinants(const Vec3& v) {
    const Rational &a = v.x, &b = v.y, &c = v.z;
    M2Determinants d;
    d.r1_expr = c * c + a * b;
    d.r2a = a * a + b * c;
    d.r2b = b * b + a * c;
    d.r3a = a * a - b * c;
    d.r3b = b * b - a * c;
    d.case1 = {b * b + a * c, c * c + a * b, a * a - b * c};
    d.case2 = {-(a * a + b * c), -(c * c + a * b), -(b * b - a * c)};
    d.case3 = {((a + b) * (a + b) + (b + c) * (b + c) + (c - a) * (c - a)) / 2,
               -2 * a * (b + c), (b + c) * (b + c) - (a + c) * (b + a)};
    d.case4 = {-((a + b) * (a + b) + (c - b) * (c - b) + (c + a) * (c + a)) / 2,
               2 * b * (a + c), -((a + c) * (a + c)) + (a + b) * (b + c)};
    d.region3 = {
        -2 * (c - b) * (a * a + a * b - b * b + a * c - b * c - c * c),
        -2 * (c + b) * (a * a - a * b + b * b - a * c - b * c + c * c),
        2 * (c - a) * (-(a * a) + a * b + b * b - a * c + b * c - c * c),
        2 * (a + c) * (a * a - a * b + b * b - a * c - b * c + c * c),
    };
    return d;
}

struct CaseVerdict {
    M2Region region;
    std::vector<M2Case> cases;  // every case whose condition holds, primary first
    M2Determinants dets;
};

inline bool m2_case_condition_holds(M2Case c, const M2Determinants& d) {
    const auto all_ge0 = [](const std::array<Rational, 3>& v) {
        return v[0] >= 0 && v[1] >= 0 && v[2] >= 0;
    };
    const auto all_le0 = [](const std::array<Rational, 3>& v) {
        return v[0] <= 0 && v[1] <= 0 && v[2] <= 0;
    };
    switch (c) {
        case M2Case::c1: return all_ge0(d.case1);
        case M2Case::c2: return all_le0(d.case2);
        case M2Case::c3: return all_ge0(d.case3);
        case M2Case::c4: return all_le0(d.case4);
        case M2Case::c5: return d.r3a < 0 && d.r3b < 0;
    }
    return false;
}

// Region split of the base-vertex space. Interior points of R1..R4 report
// the case(s) the region argument implies; points where a defining
// expression vanishes report "boundary" plus every case whose closed
// condition holds.
inline CaseVerdict m2_case_analysis(const Vec3& v) {
    if (v.is_zero()) raise(Errc::zero_vector, "base vertex must be nonzero");
    CaseVerdict verdict{M2Region::r4, {}, m2_determinants(v)};
    const auto& d = verdict.dets;
    if (d.r1_expr == 0 || d.r2a == 0 || d.r2b == 0 || d.r3a == 0 || d.r3b == 0) {
        verdict.region = M2Region::boundary;
        for (M2Case c : {M2Case::c1, M2Case::c2, M2Case::c3, M2Case::c4, M2Case::c5})
            if (m2_case_condition_holds(c, d)) verdict.cases.push_back(c);
        return verdict;
    }
    if (d.r1_expr < 0) {
        verdict.region = M2Region::r1;
        const Rational &a = v.x, &b = v.y;
        verdict.cases = {rational_abs(a) >= rational_abs(b) ? M2Case::c4
                                                            : M2Case::c3};
    } else if (d.r2a < 0 && d.r2b < 0) {
        verdict.region = M2Region::r2;
        verdict.cases = {M2Case::c3, M2Case::c4};
    } else if (d.r3a < 0 && d.r3b < 0) {
        verdict.region = M2Region::r3;
        verdict.cases = {M2Case::c5};
    } else {
        verdict.region = M2Region::r4;
        for (M2Case c : {M2Case::c1, M2Case::c2})
            if (m2_case_condition_holds(c, d)) verdict.cases.push_back(c);
    }
    return verdict;
}

// The geometric event a case names, checked with the exact predicates.
inline bool m2_case_event_occurs(M2Case c, const Vec3& v) {
    switch (c) {
        case M2Case::c1:
            return axis_pierces_triangle({0, 0, 1}, m2_delta1(v));
        case M2Case::c2:
            return axis_pierces_triangle({0, 0, 1}, m2_delta2(v));
        case M2Case::c3:
            return axis_pierces_triangle({1, -1, 1}, m2_delta3(v));
        case M2Case::c4:
            return axis_pierces_triangle({1, -1, -1}, m2_delta4(v));
        case M2Case::c5:
            return triangle_intersection_class(m2_delta3(v), m2_delta4(v)) ==
                   TriangleIntersectionClass::nontrivial;
    }
    return false;
}

// True iff the symbolic analysis names at least one case, every named case's
// geometric event occurs, and the generic verifier rejects the base.
inline bool cross_validate_m2(const Vec3& base) {
    const auto verdict = m2_case_analysis(base);
    if (verdict.cases.empty()) return false;
    for (M2Case c : verdict.cases) {
        if (!m2_case_event_occurs(c, base)) return false;
    }
    static const CandidateMap m2 = CandidateMap::build(catalog::m2_symbols());
    return !verify_realization(m2, base).embedded();
}

// ---------------------------------------------------------------------------
// Grid search and export.

inline bool fixed_by_some_rotation(const Vec3& v) {
    for (int g = 1; g < TetrahedralGroup::kOrder; ++g) {
        if (apply(v, tetra().element(g)) == v) return true;
    }
    return false;
}

// All embedded bases with integer coordinates |a|,|b|,|c| <= bound,
// gcd(a,b,c) = 1, off the rotation axes. Lexicographic order.
inline std::vector<Vec3> search_realizations(const CandidateMap& map, int bound,
                                             int workers = 1) {
    if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
    if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
    std::vector<Vec3> candidates;
    for (long a = -bound; a <= bound; ++a) {
        for (long b = -bound; b <= bound; ++b) {
            for (long c = -bound; c <= bound; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1)
                    continue;
                const Vec3 v{a, b, c};
                if (fixed_by_some_rotation(v)) continue;
                candidates.push_back(v);
            }
        }
    }
    std::vector<Vec3> hits;
    if (workers == 1) {
        for (const auto& v : candidates) {
            if (verify_realization(map, v).embedded()) hits.push_back(v);
        }
    } else {
        std::vector<std::vector<Vec3>> partial(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < candidates.size(); i += workers) {
                    if (verify_realization(map, candidates[i]).embedded()) {
                        partial[w].push_back(candidates[i]);
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());
        std::sort(hits.begin(), hits.end());
    }
    return hits;
}

// Standard OFF text for an embedded realization. Vertices appear in group
// element order; faces keep their oriented boundary walks.
inline std::string export_off(const CandidateMap& map, const Vec3& base) {
    if (!verify_realization(map, base).embedded()) {
        raise(Errc::not_embedded, "realization is not embedded");
    }
    const Realization r = place_vertices(map, base);
    std::string out = "OFF\n";
    out += std::to_string(map.vertex_count()) + " " +
           std::to_string(map.face_count()) + " " +
           std::to_string(map.edge_count()) + "\n";
    for (const auto& p : r.positions) {
        out += to_string(p.x) + " " + to_string(p.y) + " " + to_string(p.z) + "\n";
    }
    for (const auto& f : map.faces()) {
        out += "3 " + std::to_string(f.walk[0]) + " " + std::to_string(f.walk[1]) +
               " " + std::to_string(f.walk[2]) + "\n";
    }
    return out;
}

// Adjacent (edge-sharing) face pairs whose supporting planes coincide.
inline std::vector<std::pair<int, int>> coplanarity_audit(
    const std::vector<Vec3>& positions,
    const std::vector<std::array<int, 3>>& faces) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            int shared = 0;
            for (int v : faces[i])
                for (int w : faces[j]) shared += (v == w) ? 1 : 0;
            if (shared != 2) continue;
            std::vector<Vec3> pts;
            for (int v : faces[i]) pts.push_back(positions[v]);
            for (int w : faces[j]) pts.push_back(positions[w]);
            if (coplanar(pts)) out.emplace_back(i, j);
        }
    }
    return out;
}

inline std::vector<std::pair<int, int>> coplanarity_audit(const CandidateMap& map,
                                                          const Vec3& base) {
    if (!verify_realization(map, base).embedded()) {
        raise(Errc::not_embedded, "realization is not embedded");
    }
    const Realization r = place_vertices(map, base);
    std::vector<Vec3> positions(r.positions.begin(), r.positions.end());
    std::vector<std::array<int, 3>> faces;
    for (const auto& f : map.faces()) faces.push_back(f.walk);
    return coplanarity_audit(positions, faces);
}

}  // namespace vtpoly
