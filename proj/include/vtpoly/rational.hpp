// Exact rational scalars and 3-vectors. All geometric predicates in this
// library run on these types; no floating point is used anywhere on a
// decision path.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vtpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& x) {
    return x.sign();
}

inline Rational rational_abs(const Rational& x) {
    return x < 0 ? Rational(-x) : x;
}

// Exact 3-vector over the rationals (spec: Coordinate3).
struct Vec3 {
    Rational x{0};
    Rational y{0};
    Rational z{0};

    bool operator==(const Vec3&) const = default;
    bool operator<(const Vec3& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(const Rational& s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
}

inline Rational dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// "7" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::string to_string(const Vec3& v) {
    return to_string(v.x) + "," + to_string(v.y) + "," + to_string(v.z);
}

// Accepts an optionally signed integer or "p/q" fraction.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("invalid rational: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw bad();
        }
        return Integer(std::string(part));
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const Integer num = parse_int(text.substr(0, slash));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
}

// Parses "a,b,c" with rational components.
inline Vec3 parse_vec3(std::string_view text) {
    const auto c1 = text.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos) {
        throw std::invalid_argument("expected 'a,b,c', got '" + std::string(text) + "'");
    }
    return {parse_rational(text.substr(0, c1)),
            parse_rational(text.substr(c1 + 1, c2 - c1 - 1)),
            parse_rational(text.substr(c2 + 1))};
}

}  // namespace vtpoly
