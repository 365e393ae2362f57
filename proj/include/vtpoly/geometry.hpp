// Exact 3D predicates over the rationals: orientation determinants, the
// axis-pierces-triangle test, coplanarity, and an exact classification of
// the intersection of two triangles.
//
// The triangle pair classifier works with sign predicates and exact
// rational clipping only; there are no square roots and no tolerances.
// Strategy: the intersection of two triangles is a convex set. For
// non-coplanar supports it lies on the line common to both planes, so it is
// computed as the cross-section segment of one triangle with the other's
// plane, clipped against the second triangle inside its plane (projected
// along the dominant component of the plane normal, which keeps the
// projection injective on that plane). For coplanar supports the first
// triangle is clipped against the second with closed half-plane clipping.
// The resulting convex set (empty / point / segment / polygon) is then
// compared against the corners the triangles share.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "vtpoly/error.hpp"
#include "vtpoly/rational.hpp"

namespace vtpoly {

using Triangle = std::array<Vec3, 3>;

// Determinant of the 3x3 matrix with rows r1, r2, r3.
inline Rational det3(const Vec3& r1, const Vec3& r2, const Vec3& r3) {
    return dot(r1, cross(r2, r3));
}

// Orientation of four points: det3 of the difference vectors, equal to the
// 4x4 determinant with a homogeneous row of ones on top.
inline Rational orient4(const Vec3& p0, const Vec3& p1, const Vec3& p2,
                        const Vec3& p3) {
    return det3(p1 - p0, p2 - p0, p3 - p0);
}

inline Vec3 triangle_normal(const Triangle& t) {
    return cross(t[1] - t[0], t[2] - t[0]);
}

inline bool triangle_degenerate(const Triangle& t) {
    return triangle_normal(t).is_zero();
}

inline void require_nondegenerate(const Triangle& t) {
    if (triangle_degenerate(t)) {
        raise(Errc::degenerate_triangle, "triangle corners are collinear");
    }
}

// True iff the line through the origin with direction p meets the triangle,
// boundary included: no two of the three determinants |p t_i t_{i+1}| may
// have strictly opposite signs.
inline bool axis_pierces_triangle(const Vec3& p, const Triangle& t) {
    if (p.is_zero()) raise(Errc::zero_vector, "axis direction is zero");
    require_nondegenerate(t);
    const int s0 = sign(det3(p, t[0], t[1]));
    const int s1 = sign(det3(p, t[1], t[2]));
    const int s2 = sign(det3(p, t[2], t[0]));
    const bool pos = s0 > 0 || s1 > 0 || s2 > 0;
    const bool neg = s0 < 0 || s1 < 0 || s2 < 0;
    return !(pos && neg);
}

// True iff every 4-subset of the points has vanishing orientation.
inline bool coplanar(const std::vector<Vec3>& points) {
    const std::size_t n = points.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (orient4(points[a], points[b], points[c], points[d]) != 0)
                        return false;
    return true;
}

enum class TriangleIntersectionClass {
    disjoint,
    shared_vertex_only,
    shared_edge_only,
    nontrivial,
};

inline const char* to_string(TriangleIntersectionClass c) {
    switch (c) {
        case TriangleIntersectionClass::disjoint: return "Disjoint";
        case TriangleIntersectionClass::shared_vertex_only: return "SharedVertexOnly";
        case TriangleIntersectionClass::shared_edge_only: return "SharedEdgeOnly";
        case TriangleIntersectionClass::nontrivial: return "Nontrivial";
    }
    return "?";
}

namespace detail {

struct Point2 {
    Rational u, v;
    bool operator==(const Point2&) const = default;
    bool operator<(const Point2& o) const {
        if (u != o.u) return u < o.u;
        return v < o.v;
    }
};

inline Rational cross2(const Point2& o, const Point2& a, const Point2& b) {
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

// Index of the largest |component|, by exact comparison.
inline int dominant_axis(const Vec3& n) {
    const Rational ax = rational_abs(n.x), ay = rational_abs(n.y),
                   az = rational_abs(n.z);
    if (ax >= ay && ax >= az) return 0;
    return ay >= az ? 1 : 2;
}

inline Point2 project(const Vec3& p, int axis) {
    switch (axis) {
        case 0: return {p.y, p.z};
        case 1: return {p.x, p.z};
        default: return {p.x, p.y};
    }
}

// Sutherland-Hodgman step: keep side*cross2(a, b, p) >= 0.
inline std::vector<Point2> clip_polygon(const std::vector<Point2>& poly,
                                        const Point2& a, const Point2& b,
                                        int side) {
    std::vector<Point2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        const Rational dp = side * cross2(a, b, p);
        const Rational dq = side * cross2(a, b, q);
        const auto crossing = [&] {
            const Rational t = dp / (dp - dq);
            return Point2{p.u + t * (q.u - p.u), p.v + t * (q.v - p.v)};
        };
        if (dp >= 0) {
            out.push_back(p);
            if (dq < 0) out.push_back(crossing());
        } else if (dq > 0) {
            out.push_back(crossing());
        }
    }
    return out;
}

enum class SetKind { empty, point, segment, area };

struct ConvexSet2 {
    SetKind kind = SetKind::empty;
    Point2 p0, p1;  // point, or segment extremes
};

inline ConvexSet2 classify_point_set(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return {SetKind::empty, {}, {}};
    if (pts.size() == 1) return {SetKind::point, pts[0], {}};
    const Point2& lo = pts.front();
    const Point2& hi = pts.back();
    for (const Point2& p : pts) {
        if (cross2(lo, hi, p) != 0) return {SetKind::area, {}, {}};
    }
    return {SetKind::segment, lo, hi};  // extremes of a collinear sorted set
}

struct ProjectedTriangle {
    std::array<Point2, 3> q;
    int side;  // orientation sign of the projection
};

inline ProjectedTriangle project_triangle(const Triangle& t, int axis) {
    ProjectedTriangle pt{{project(t[0], axis), project(t[1], axis),
                          project(t[2], axis)},
                         0};
    pt.side = sign(cross2(pt.q[0], pt.q[1], pt.q[2]));
    return pt;
}

inline bool point_in_projected(const ProjectedTriangle& t, const Point2& p) {
    for (int i = 0; i < 3; ++i) {
        if (t.side * cross2(t.q[i], t.q[(i + 1) % 3], p) < 0) return false;
    }
    return true;
}

// Exact intersection of triangle t1 with the plane of t2, given the signed
// volumes d[i] = orient4(t2[0], t2[1], t2[2], t1[i]) (not all zero).
// Returns nullopt, a point, or a segment (as two 3D points).
inline std::optional<std::pair<Vec3, Vec3>> cross_section(
    const Triangle& t1, const std::array<Rational, 3>& d) {
    std::array<int, 3> s{sign(d[0]), sign(d[1]), sign(d[2])};
    const bool pos = s[0] > 0 || s[1] > 0 || s[2] > 0;
    const bool neg = s[0] < 0 || s[1] < 0 || s[2] < 0;
    if (pos && neg) {
        std::vector<Vec3> pts;
        for (int i = 0; i < 3; ++i)
            if (s[i] == 0) pts.push_back(t1[i]);
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            if (s[i] * s[j] < 0) {
                const Rational t = d[i] / (d[i] - d[j]);
                pts.push_back(t1[i] + t * (t1[j] - t1[i]));
            }
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() == 1) return std::pair{pts[0], pts[0]};
        return std::pair{pts[0], pts[1]};
    }
    // one-sided: the zero set is a corner or an edge
    std::vector<int> zero;
    for (int i = 0; i < 3; ++i)
        if (s[i] == 0) zero.push_back(i);
    if (zero.empty()) return std::nullopt;
    if (zero.size() == 1) return std::pair{t1[zero[0]], t1[zero[0]]};
    return std::pair{t1[zero[0]], t1[zero[1]]};
}

}  // namespace detail

// Exact classification of the intersection of two triangles as point sets.
inline TriangleIntersectionClass triangle_intersection_class(const Triangle& t1,
                                                             const Triangle& t2) {
    using namespace detail;
    using Class = TriangleIntersectionClass;
    require_nondegenerate(t1);
    require_nondegenerate(t2);

    std::vector<Vec3> shared;
    for (const Vec3& p : t1)
        for (const Vec3& q : t2)
            if (p == q) shared.push_back(p);
    std::sort(shared.begin(), shared.end());
    shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
    if (shared.size() == 3) return Class::nontrivial;  // identical supports

    const Vec3 n2 = triangle_normal(t2);
    std::array<Rational, 3> d1;
    for (int i = 0; i < 3; ++i) d1[i] = dot(n2, t1[i] - t2[0]);

    if (d1[0] == 0 && d1[1] == 0 && d1[2] == 0) {
        // Coplanar: clip t1 against t2 in the projected plane.
        const int axis = dominant_axis(n2);
        const auto q = project_triangle(t2, axis);
        std::vector<Point2> poly{project(t1[0], axis), project(t1[1], axis),
                                 project(t1[2], axis)};
        for (int i = 0; i < 3 && !poly.empty(); ++i) {
            poly = clip_polygon(poly, q.q[i], q.q[(i + 1) % 3], q.side);
        }
        const auto set = classify_point_set(poly);
        switch (set.kind) {
            case SetKind::empty:
                return Class::disjoint;
            case SetKind::point:
                return (shared.size() == 1 && project(shared[0], axis) == set.p0)
                           ? Class::shared_vertex_only
                           : Class::nontrivial;
            case SetKind::segment: {
                if (shared.size() == 2) {
                    std::array<Point2, 2> sp{project(shared[0], axis),
                                             project(shared[1], axis)};
                    if (sp[1] < sp[0]) std::swap(sp[0], sp[1]);
                    if (sp[0] == set.p0 && sp[1] == set.p1)
                        return Class::shared_edge_only;
                }
                return Class::nontrivial;
            }
            case SetKind::area:
                return Class::nontrivial;
        }
    }

    const auto one_sided = [](const std::array<Rational, 3>& d) {
        return (d[0] > 0 && d[1] > 0 && d[2] > 0) ||
               (d[0] < 0 && d[1] < 0 && d[2] < 0);
    };
    if (one_sided(d1)) return Class::disjoint;
    const Vec3 n1 = triangle_normal(t1);
    std::array<Rational, 3> d2;
    for (int i = 0; i < 3; ++i) d2[i] = dot(n1, t2[i] - t1[0]);
    if (one_sided(d2)) return Class::disjoint;

    const auto section = cross_section(t1, d1);
    if (!section) return Class::disjoint;
    const auto [A, B] = *section;

    const int axis = dominant_axis(n2);
    const auto q = project_triangle(t2, axis);
    if (A == B) {
        if (!point_in_projected(q, project(A, axis))) return Class::disjoint;
        return (shared.size() == 1 && shared[0] == A) ? Class::shared_vertex_only
                                                      : Class::nontrivial;
    }

    // Clip the section [A,B] against t2, tracking the exact parameter range.
    const Point2 a2 = project(A, axis), b2 = project(B, axis);
    Rational lo(0), hi(1);
    for (int i = 0; i < 3; ++i) {
        const Rational da = q.side * cross2(q.q[i], q.q[(i + 1) % 3], a2);
        const Rational db = q.side * cross2(q.q[i], q.q[(i + 1) % 3], b2);
        if (da < 0 && db < 0) return Class::disjoint;
        if (da >= 0 && db >= 0) continue;
        const Rational r = da / (da - db);
        if (da < 0) {
            if (r > lo) lo = r;
        } else {
            if (r < hi) hi = r;
        }
    }
    if (lo > hi) return Class::disjoint;
    const Vec3 lo3 = A + lo * (B - A);
    const Vec3 hi3 = A + hi * (B - A);
    if (lo3 == hi3) {
        return (shared.size() == 1 && shared[0] == lo3) ? Class::shared_vertex_only
                                                        : Class::nontrivial;
    }
    if (shared.size() == 2) {
        std::array<Vec3, 2> sp{shared[0], shared[1]};
        std::array<Vec3, 2> got{std::min(lo3, hi3), std::max(lo3, hi3)};
        if (sp[0] == got[0] && sp[1] == got[1]) return Class::shared_edge_only;
    }
    return Class::nontrivial;
}

}  // namespace vtpoly
