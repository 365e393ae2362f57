// The tetrahedral rotation group T as exact integer matrices, together with
// its normalizer in O(3).
//
// Conventions used throughout the library:
//   * row vectors act on the right:  image(v) = v * M;
//   * products compose left to right: v * (g*h) = (v*g) * h, so g*h is the
//     ordinary matrix product of g followed by h.
//
// Element indices follow a fixed total order which doubles as the
// serialization order: 1 < I1 < I2 < I3 < Y1 < Y2 < Y3 < Y4 < Y1i < Y2i <
// Y3i < Y4i (index 0 is the identity, 1..11 are the core rotations).
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtpoly/error.hpp"
#include "vtpoly/rational.hpp"

namespace vtpoly {

// 3x3 integer matrix; all group elements handled here are orthogonal with
// entries in {-1,0,1}.
struct Mat3 {
    std::array<int, 9> m{};

    int operator()(int r, int c) const { return m[3 * r + c]; }
    int& operator()(int r, int c) { return m[3 * r + c]; }

    bool operator==(const Mat3&) const = default;
    auto operator<=>(const Mat3&) const = default;

    static Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    Mat3 transpose() const {
        Mat3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    int det() const {
        const auto& a = *this;
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    }

    bool is_orthogonal() const {
        const Mat3 t = transpose();
        Mat3 p;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(r, k) * t(k, c);
                p(r, c) = s;
            }
        return p == identity();
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 p;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int s = 0;
            for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
            p(r, c) = s;
        }
    return p;
}

inline Mat3 operator-(const Mat3& a) {
    Mat3 n = a;
    for (auto& e : n.m) e = -e;
    return n;
}

// v * M with a rational row vector.
inline Vec3 apply(const Vec3& v, const Mat3& m) {
    return {v.x * m(0, 0) + v.y * m(1, 0) + v.z * m(2, 0),
            v.x * m(0, 1) + v.y * m(1, 1) + v.z * m(2, 1),
            v.x * m(0, 2) + v.y * m(1, 2) + v.z * m(2, 2)};
}

// a^-1 * g * a (orthogonal inverse = transpose).
inline Mat3 conjugate(const Mat3& g, const Mat3& a) {
    return a.transpose() * g * a;
}

struct RotationAxis {
    std::array<int, 3> direction;  // primitive integer direction
    int order;                     // 2 or 3
};

// The tetrahedral rotation group: 12 elements, 11 core rotations.
class TetrahedralGroup {
public:
    static constexpr int kOrder = 12;
    static constexpr int kCoreCount = 11;

    TetrahedralGroup() {
        const Mat3 i1{{1, 0, 0, 0, -1, 0, 0, 0, -1}};
        const Mat3 i2{{-1, 0, 0, 0, 1, 0, 0, 0, -1}};
        const Mat3 i3{{-1, 0, 0, 0, -1, 0, 0, 0, 1}};
        const Mat3 y1{{0, 1, 0, 0, 0, 1, 1, 0, 0}};
        const Mat3 y2{{0, 0, -1, 1, 0, 0, 0, -1, 0}};
        const Mat3 y3{{0, 0, -1, -1, 0, 0, 0, 1, 0}};
        const Mat3 y4{{0, 0, 1, -1, 0, 0, 0, -1, 0}};
        elements_ = {Mat3::identity(), i1, i2, i3,
                     y1, y2, y3, y4,
                     y1.transpose(), y2.transpose(), y3.transpose(), y4.transpose()};
        names_ = {"1", "I1", "I2", "I3", "Y1", "Y2", "Y3", "Y4",
                  "Y1i", "Y2i", "Y3i", "Y4i"};
        for (int a = 0; a < kOrder; ++a) {
            for (int b = 0; b < kOrder; ++b) {
                const auto idx = find(elements_[a] * elements_[b]);
                if (!idx) raise(Errc::invalid_symbol_set, "group is not closed");
                mul_[a][b] = *idx;
            }
        }
        for (int a = 0; a < kOrder; ++a) {
            for (int b = 0; b < kOrder; ++b) {
                if (mul_[a][b] == 0) inv_[a] = b;
            }
            int o = 1, x = a;
            while (x != 0) {
                x = mul_[x][a];
                ++o;
            }
            order_[a] = o;
        }
        for (int g = 1; g < kOrder; ++g) axes_[g] = fixed_axis(elements_[g]);
    }

    const Mat3& element(int i) const { return elements_[i]; }
    std::string_view name(int i) const { return names_[i]; }
    int multiply(int a, int b) const { return mul_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int order(int a) const { return order_[a]; }
    bool is_involution(int a) const { return order_[a] == 2; }

    // Core rotations are all non-identity elements of T.
    static bool is_core(int i) { return i >= 1 && i < kOrder; }
    static std::array<int, kCoreCount> core_rotations() {
        std::array<int, kCoreCount> r{};
        for (int i = 0; i < kCoreCount; ++i) r[i] = i + 1;
        return r;
    }

    RotationAxis axis(int g) const { return axes_[g]; }

    std::optional<int> find(const Mat3& m) const {
        for (int i = 0; i < kOrder; ++i)
            if (elements_[i] == m) return i;
        return std::nullopt;
    }

    std::optional<int> index_of_name(std::string_view n) const {
        for (int i = 0; i < kOrder; ++i)
            if (names_[i] == n) return i;
        return std::nullopt;
    }

    // a^-1 * g * a for g given by index; a must normalize T.
    int conjugate_index(int g, const Mat3& a) const {
        const auto idx = find(conjugate(elements_[g], a));
        if (!idx) raise(Errc::not_in_normalizer, "conjugation leaves the group");
        return *idx;
    }

private:
    static RotationAxis fixed_axis(const Mat3& m) {
        // Fixed row vector of an orthogonal integer matrix with small entries:
        // scan primitive integer directions.
        static constexpr std::array<std::array<int, 3>, 13> kDirs{{{1, 0, 0},
                                                                   {0, 1, 0},
                                                                   {0, 0, 1},
                                                                   {1, 1, 1},
                                                                   {1, 1, -1},
                                                                   {1, -1, 1},
                                                                   {1, -1, -1},
                                                                   {1, 1, 0},
                                                                   {1, -1, 0},
                                                                   {1, 0, 1},
                                                                   {1, 0, -1},
                                                                   {0, 1, 1},
                                                                   {0, 1, -1}}};
        for (const auto& d : kDirs) {
            bool fixed = true;
            for (int c = 0; c < 3; ++c) {
                int img = d[0] * m(0, c) + d[1] * m(1, c) + d[2] * m(2, c);
                if (img != d[c]) fixed = false;
            }
            if (fixed) {
                int o = 1;
                Mat3 x = m;
                while (x != Mat3::identity()) {
                    x = x * m;
                    ++o;
                }
                return {d, o};
            }
        }
        raise(Errc::invalid_symbol_set, "rotation has no integer axis");
    }

    std::array<Mat3, kOrder> elements_;
    std::array<std::string_view, kOrder> names_;
    std::array<std::array<int, kOrder>, kOrder> mul_{};
    std::array<int, kOrder> inv_{};
    std::array<int, kOrder> order_{};
    std::array<RotationAxis, kOrder> axes_{};
};

inline const TetrahedralGroup& tetra() {
    static const TetrahedralGroup g;
    return g;
}

// Named element indices, in the canonical order.
namespace elem {
inline constexpr int id = 0;
inline constexpr int I1 = 1, I2 = 2, I3 = 3;
inline constexpr int Y1 = 4, Y2 = 5, Y3 = 6, Y4 = 7;
inline constexpr int Y1i = 8, Y2i = 9, Y3i = 10, Y4i = 11;
}  // namespace elem

// N_{O(3)}(T): the 48 signed permutation matrices; exactly the orthogonal
// maps permuting T's axis system. Built by filtering all signed permutations
// through the normalization condition rather than asserted.
class NormalizerGroup {
public:
    NormalizerGroup() {
        const auto& t = tetra();
        static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : kPerm) {
            for (int smask = 0; smask < 8; ++smask) {
                Mat3 a{};
                for (int r = 0; r < 3; ++r) a(r, p[r]) = (smask >> r & 1) ? -1 : 1;
                bool normalizes = true;
                for (int g = 1; g < TetrahedralGroup::kOrder && normalizes; ++g) {
                    if (!t.find(conjugate(t.element(g), a))) normalizes = false;
                }
                if (normalizes) {
                    elements_.push_back(a);
                    if (a.det() == 1) orientation_preserving_.push_back(a);
                }
            }
        }
        std::sort(elements_.begin(), elements_.end());
        std::sort(orientation_preserving_.begin(), orientation_preserving_.end());
        for (const auto& a : elements_) {
            bool central = true;
            for (int g = 0; g < TetrahedralGroup::kOrder; ++g) {
                if (a * t.element(g) != t.element(g) * a) central = false;
            }
            if (central) centralizer_.push_back(a);
        }
    }

    const std::vector<Mat3>& elements() const { return elements_; }
    const std::vector<Mat3>& orientation_preserving() const {
        return orientation_preserving_;
    }
    // C_{O(3)}(T); exposed read-only, nothing downstream consumes it.
    const std::vector<Mat3>& centralizer() const { return centralizer_; }

    bool contains(const Mat3& a) const {
        return std::binary_search(elements_.begin(), elements_.end(), a);
    }

private:
    std::vector<Mat3> elements_;
    std::vector<Mat3> orientation_preserving_;
    std::vector<Mat3> centralizer_;
};

inline const NormalizerGroup& normalizer() {
    static const NormalizerGroup n;
    return n;
}

inline std::string to_string(const Mat3& m) {
    std::string s = "[";
    for (int r = 0; r < 3; ++r) {
        s += r ? ";" : "";
        for (int c = 0; c < 3; ++c) {
            s += c ? "," : "";
            s += std::to_string(m(r, c));
        }
    }
    return s + "]";
}

}  // namespace vtpoly
