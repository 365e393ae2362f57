// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. All arithmetic is exact, so every comparison is exact
// equality; runtime budgets are asserted where stated.
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracle_util.hpp"
#include "vtpoly/admissibility.hpp"
#include "vtpoly/catalog.hpp"
#include "vtpoly/enumerate.hpp"
#include "vtpoly/geomiso.hpp"
#include "vtpoly/realize.hpp"

using namespace vtpoly;
using namespace vtpoly::elem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(Clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            failures_.push_back(detail);
        }
    }

    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    void finish() {
        const double t = seconds();
        if (failures_.empty()) {
            std::printf("PASS criterion %d: %s (%.2fs)\n", number_, title_.c_str(), t);
        } else {
            ++g_failures;
            std::printf("FAIL criterion %d: %s (%.2fs)\n", number_, title_.c_str(), t);
            for (const auto& f : failures_) std::printf("     - %s\n", f.c_str());
        }
    }

private:
    int number_;
    std::string title_;
    Clock::time_point start_;
    std::vector<std::string> failures_;
};

bool cyclic_eq(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[(i + r) % a.size()] != b[i]) ok = false;
        if (ok) return true;
    }
    return false;
}

std::vector<int> ids(const std::vector<const char*>& names) {
    std::vector<int> out;
    for (const char* n : names) out.push_back(*tetra().index_of_name(n));
    return out;
}

// criterion 1 -----------------------------------------------------------
void group_fidelity() {
    Criterion c(1, "group fidelity: published matrices, Y4*Y2=Y3^-1, |N|=48");
    const auto& t = tetra();
    const int kTable[12][9] = {
        {1, 0, 0, 0, 1, 0, 0, 0, 1},     // 1
        {1, 0, 0, 0, -1, 0, 0, 0, -1},   // I1
        {-1, 0, 0, 0, 1, 0, 0, 0, -1},   // I2
        {-1, 0, 0, 0, -1, 0, 0, 0, 1},   // I3
        {0, 1, 0, 0, 0, 1, 1, 0, 0},     // Y1
        {0, 0, -1, 1, 0, 0, 0, -1, 0},   // Y2
        {0, 0, -1, -1, 0, 0, 0, 1, 0},   // Y3
        {0, 0, 1, -1, 0, 0, 0, -1, 0},   // Y4
        {0, 0, 1, 1, 0, 0, 0, 1, 0},     // Y1^-1
        {0, 1, 0, 0, 0, -1, -1, 0, 0},   // Y2^-1
        {0, -1, 0, 0, 0, 1, -1, 0, 0},   // Y3^-1
        {0, -1, 0, 0, 0, -1, 1, 0, 0},   // Y4^-1
    };
    for (int i = 0; i < 12; ++i) {
        bool same = true;
        for (int k = 0; k < 9; ++k)
            if (t.element(i).m[k] != kTable[i][k]) same = false;
        c.expect(same, std::string("matrix mismatch for ") + std::string(t.name(i)));
    }
    c.expect(t.multiply(Y4, Y2) == Y3i, "Y4*Y2 != Y3^-1");
    c.expect(normalizer().elements().size() == 48, "|N| != 48");
    c.expect(normalizer().orientation_preserving().size() == 24, "|N+| != 24");
    c.expect(c.seconds() < 1.0, "runtime above one second");
    c.finish();
}

// criterion 2 -----------------------------------------------------------
void enumeration_reproduction() {
    Criterion c(2, "enumeration: {0,1,3,3,4,4,6}, tucker -> four maps, "
                   "tucker+schewe+genus>=2 -> {M1,M2}");
    const auto all = enumerate_candidate_maps();
    std::multiset<int> genera;
    for (const auto& cls : all) genera.insert(cls.summary.genus);
    c.expect(genera == std::multiset<int>{0, 1, 3, 3, 4, 4, 6},
             "unfiltered genus multiset differs");

    EnumerationFilters tucker;
    tucker.tucker = true;
    const auto four = enumerate_candidate_maps(tucker);
    c.expect(four.size() == 4, "tucker filter does not leave four classes");

    const std::vector<std::pair<std::vector<OrbitSymbol>, std::vector<int>>> table{
        {catalog::m0_symbols(), ids({"Y1", "Y1i", "Y4", "Y4i", "I1"})},
        {catalog::m1_symbols(),
         ids({"Y1", "I3", "Y3i", "Y3", "Y1i", "Y4", "Y4i", "I1"})},
        {catalog::m2_symbols(),
         ids({"Y1", "Y3i", "Y3", "I2", "Y1i", "Y4", "Y4i", "I1"})},
        {catalog::m3_symbols(),
         ids({"Y1", "I2", "Y2i", "Y3i", "Y3", "I3", "Y2", "Y1i", "Y4", "Y4i", "I1"})},
    };
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& [symbols, rotation] = table[i];
        const auto canonical = canonical_map_form(symbols);
        bool found = false;
        for (const auto& cls : four) found |= cls.representative == canonical;
        c.expect(found, "tucker output misses table map " + std::to_string(i));
        c.expect(cyclic_eq(CandidateMap::build(symbols).local_rotation(), rotation),
                 "local rotation differs for table map " + std::to_string(i));
    }

    EnumerationFilters strict;
    strict.tucker = strict.schewe = true;
    strict.min_genus = 2;
    const auto two = enumerate_candidate_maps(strict);
    std::set<std::vector<OrbitSymbol>> got;
    for (const auto& cls : two) got.insert(cls.representative);
    c.expect(got == std::set<std::vector<OrbitSymbol>>{
                        canonical_map_form(catalog::m1_symbols()),
                        canonical_map_form(catalog::m2_symbols())},
             "tucker+schewe+genus>=2 is not exactly {M1, M2}");
    c.expect(c.seconds() < 60.0, "runtime above 60 s");
    c.finish();
}

// criterion 3 -----------------------------------------------------------
void theorem_reproduction() {
    Criterion c(3, "genus-3 polyhedron at (1,2,6): counts, coordinates, faces, "
                   "no coplanar neighbors");
    const auto m1 = CandidateMap::build(catalog::m1_symbols());
    const auto report = verify_realization(m1, {1, 2, 6});
    c.expect(report.embedded(), "not embedded");
    c.expect(report.summary.vertex_count == 12 && report.summary.edge_count == 48 &&
                 report.summary.face_count == 32,
             "counts differ from 12/48/32");
    c.expect(report.summary.genus == 3, "genus != 3");
    c.expect(report.summary.schlafli_vertex_degree == 8, "vertex degree != 8");

    const std::vector<Vec3> kVertexTable{
        {1, 2, 6},   {-2, 6, -1}, {-6, -1, 2}, {6, 1, 2},
        {-1, -2, 6}, {2, -6, -1}, {1, -2, -6}, {-2, -6, 1},
        {-6, 1, -2}, {-1, 2, -6}, {2, 6, 1},   {6, -1, -2},
    };
    const int kFaceTable[32][3] = {
        {1, 2, 3},   {1, 3, 5},   {1, 4, 7},   {4, 5, 6},   {1, 5, 4},
        {1, 7, 12},  {7, 8, 9},   {2, 1, 11},  {2, 10, 6},  {10, 11, 12},
        {2, 11, 10}, {2, 6, 7},   {1, 12, 8},  {3, 2, 9},   {3, 8, 12},
        {2, 7, 4},   {3, 9, 8},   {3, 12, 6},  {3, 6, 10},  {4, 6, 12},
        {4, 11, 9},  {5, 9, 11},  {4, 12, 11}, {4, 9, 2},   {6, 5, 8},
        {5, 3, 10},  {6, 8, 7},   {5, 10, 9},  {7, 9, 10},  {8, 5, 11},
        {7, 10, 12}, {8, 11, 1},
    };
    const auto r = place_vertices(m1, {1, 2, 6});
    c.expect(std::set<Vec3>(r.positions.begin(), r.positions.end()) ==
                 std::set<Vec3>(kVertexTable.begin(), kVertexTable.end()),
             "vertex set differs from the published coordinates");
    std::map<Vec3, int> index;
    for (std::size_t i = 0; i < kVertexTable.size(); ++i)
        index[kVertexTable[i]] = static_cast<int>(i);
    std::set<std::set<int>> ours, published;
    for (const auto& f : m1.faces())
        ours.insert({index.at(r.positions[f.walk[0]]),
                     index.at(r.positions[f.walk[1]]),
                     index.at(r.positions[f.walk[2]])});
    for (const auto& f : kFaceTable)
        published.insert({f[0] - 1, f[1] - 1, f[2] - 1});
    c.expect(ours == published, "face set differs from the published triangles");
    c.expect(coplanarity_audit(m1, {1, 2, 6}).empty(),
             "adjacent coplanar faces found");
    c.expect(c.seconds() < 1.0, "runtime above 1 s");
    c.finish();
}

// criterion 4 -----------------------------------------------------------
void m2_infeasibility() {
    Criterion c(4, "M2 infeasible: empty grid search at bound 10 and 10^4 "
                   "cross-validated random points");
    const auto m2 = CandidateMap::build(catalog::m2_symbols());
    c.expect(search_realizations(m2, 10).empty(),
             "grid search found a realization of M2");

    std::mt19937 rng(20250810);
    int checked = 0, agreed = 0;
    while (checked < 10000) {
        const Vec3 v = testutil::random_point(rng, 60, 11);
        if (v.is_zero() || fixed_by_some_rotation(v)) continue;
        ++checked;
        agreed += cross_validate_m2(v) ? 1 : 0;
    }
    c.expect(agreed == checked, "cross-validation disagreed on " +
                                    std::to_string(checked - agreed) + " points");
    c.expect(c.seconds() < 300.0, "runtime above 5 min");
    c.finish();
}

// criterion 5 -----------------------------------------------------------
Rational det4_literal(const std::array<std::array<Rational, 4>, 4>& m) {
    Rational total = 0;
    for (int j = 0; j < 4; ++j) {
        std::array<std::array<Rational, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int col = 0; col < 4; ++col) {
                if (col == j) continue;
                minor[r - 1][cc++] = m[r][col];
            }
        }
        const Rational d = minor[0][0] * (minor[1][1] * minor[2][2] -
                                          minor[1][2] * minor[2][1]) -
                           minor[0][1] * (minor[1][0] * minor[2][2] -
                                          minor[1][2] * minor[2][0]) +
                           minor[0][2] * (minor[1][0] * minor[2][1] -
                                          minor[1][1] * minor[2][0]);
        total += (j % 2 == 0 ? 1 : -1) * m[0][j] * d;
    }
    return total;
}

void section7_algebra() {
    Criterion c(5, "case determinant formulas and region-3 factorizations as "
                   "polynomial identities at 10^3 random points");
    std::mt19937 rng(777);
    for (int iter = 0; iter < 1000; ++iter) {
        const Vec3 v = testutil::random_point(rng, 50, 9);
        const Rational &a = v.x, &b = v.y, &cc = v.z;
        const auto d = m2_determinants(v);

        const auto dets = [](const Vec3& p, const Triangle& t) {
            return std::array<Rational, 3>{det3(p, t[0], t[1]), det3(p, t[1], t[2]),
                                           det3(p, t[2], t[0])};
        };
        bool ok = d.case1 == dets({0, 0, 1}, m2_delta1(v)) &&
                  d.case2 == dets({0, 0, 1}, m2_delta2(v)) &&
                  d.case3 == dets({1, -1, 1}, m2_delta3(v)) &&
                  d.case4 == dets({-1, 1, 1}, m2_delta4(v));
        if (!ok) {
            c.expect(false, "case determinant formula mismatch at " + to_string(v));
            break;
        }

        // Literal 4x4 determinants of the region-3 analysis.
        const std::array<std::array<std::array<Rational, 4>, 4>, 4> mats{{
            {{{1, 1, 1, 1}, {-cc, a, -b, b}, {-a, b, -cc, cc}, {b, cc, a, a}}},
            {{{1, 1, 1, 1}, {cc, a, -b, b}, {a, b, -cc, cc}, {b, cc, a, a}}},
            {{{1, 1, 1, 1}, {-b, a, -cc, cc}, {-cc, b, -a, a}, {a, cc, b, b}}},
            {{{1, 1, 1, 1}, {b, a, -cc, cc}, {cc, b, -a, a}, {a, cc, b, b}}},
        }};
        for (int k = 0; k < 4; ++k) {
            if (det4_literal(mats[k]) != d.region3[k]) {
                c.expect(false, "region-3 factorization " + std::to_string(k) +
                                    " fails at " + to_string(v));
                iter = 1000;
                break;
            }
        }
    }
    c.finish();
}

// criterion 6 -----------------------------------------------------------
void genus_bookkeeping() {
    Criterion c(6, "genus bookkeeping: incidence vs shortcut, Heawood values, "
                   "Tucker vs brute force up to genus 30");
    for (const auto& cls : enumerate_candidate_maps()) {
        const auto m = CandidateMap::build(cls.representative);
        c.expect(m.genus() == genus_shortcut(m.entry_occurrences(), m.face_count()),
                 "genus shortcut mismatch");
    }
    c.expect(heawood_min_vertices(2) == 10, "heawood(2) != 10");
    c.expect(heawood_bound_raw(2) == 9, "raw heawood(2) != 9");
    c.expect(heawood_min_vertices(11) == 15, "heawood(11) != 15");
    std::set<int> oracle;
    for (int m1 = 0; 6 * m1 <= 30; ++m1)
        for (int m2 = 0; 6 * m1 + 8 * m2 <= 30; ++m2)
            for (int r : {0, 3, 5, 7})
                if (6 * m1 + 8 * m2 + r <= 30) oracle.insert(6 * m1 + 8 * m2 + r);
    for (int g = 0; g <= 30; ++g) {
        c.expect(tucker_admissible(GroupKind::tetrahedral, g) == (oracle.count(g) > 0),
                 "tucker mismatch at genus " + std::to_string(g));
    }
    c.finish();
}

// criterion 7 -----------------------------------------------------------
void snub_sanity() {
    Criterion c(7, "snub tetrahedron: non-empty search at bound 2, all hits "
                   "embedded with genus 0");
    const auto m0 = CandidateMap::build(catalog::m0_symbols());
    const auto hits = search_realizations(m0, 2);
    c.expect(!hits.empty(), "no realization found at bound 2");
    for (const auto& v : hits) {
        const auto report = verify_realization(m0, v);
        c.expect(report.embedded() && report.summary.genus == 0,
                 "hit " + to_string(v) + " does not verify");
    }
    c.finish();
}

// criterion 8 -----------------------------------------------------------
void geometry_oracle_agreement() {
    Criterion c(8, "exact classifier vs floating-point oracle on 10^4 pairs, "
                   "zero symmetry/scale inconsistencies");
    std::mt19937 rng(31415);
    const double band = 1e-7;
    const Rational lambda(11, 5);
    int compared = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        const auto [t1, t2] = iter % 2 == 0
                                  ? std::pair{testutil::random_triangle(rng),
                                              testutil::random_triangle(rng)}
                                  : testutil::random_close_pair(rng);
        const auto cls = triangle_intersection_class(t1, t2);
        if (triangle_intersection_class(t2, t1) != cls) {
            c.expect(false, "symmetry violated");
            break;
        }
        const Triangle s1{lambda * t1[0], lambda * t1[1], lambda * t1[2]};
        const Triangle s2{lambda * t2[0], lambda * t2[1], lambda * t2[2]};
        if (triangle_intersection_class(s1, s2) != cls) {
            c.expect(false, "scale invariance violated");
            break;
        }
        const auto oracle = testutil::float_triangle_oracle(t1, t2);
        if (oracle.margin <= band) continue;
        ++compared;
        if ((cls != TriangleIntersectionClass::disjoint) != oracle.intersects) {
            c.expect(false, "oracle disagreement outside the margin band");
            break;
        }
    }
    c.expect(compared > 8000, "too few comparisons outside the band: " +
                                  std::to_string(compared));
    c.finish();
}

}  // namespace

int main() {
    group_fidelity();
    enumeration_reproduction();
    theorem_reproduction();
    m2_infeasibility();
    section7_algebra();
    genus_bookkeeping();
    snub_sanity();
    geometry_oracle_agreement();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
