#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls into the code under test.

#include <array>
#include <cstdint>
#include <optional>

#include "anloc/exact/rational.hpp"

namespace anloc::oracle {

struct Pt {
    Rational x, y;
};

// The six triangles around the apex (0, 1 - (m+1)/2) on which delta_n(m, .)
// is linear; vertex 0 is the apex in each.
inline std::array<std::array<Pt, 3>, 6> delta_triangles(std::int64_t n, std::int64_t m) {
    const Rational m1(static_cast<long>(m + 1)), mm(static_cast<long>(m));
    const Rational nn(static_cast<long>(n)), np(static_cast<long>(n + 1));
    const Pt apex{0, 1 - m1 / 2};
    const Pt v1{-m1, 1}, v2{-m1 / np, 1}, v3{-m1 / nn, m1 / nn + 1};
    const Pt v4{m1, -mm}, v5{m1 / np, -mm}, v6{m1 / nn, -m1 / nn - mm};
    return {{{apex, v3, v2}, {apex, v2, v1}, {apex, v1, v6}, {apex, v6, v5}, {apex, v5, v4}, {apex, v4, v3}}};
}

inline Rational cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Value at p of the affine function that is `apex_value` at t[0] and 0 at the
// other vertices, or nullopt when p lies outside the closed triangle.
inline std::optional<Rational> interpolate(const std::array<Pt, 3>& t, const Pt& p, const Rational& apex_value) {
    const Rational area = cross(t[0], t[1], t[2]);
    const Rational w0 = cross(p, t[1], t[2]) / area;
    const Rational w1 = cross(t[0], p, t[2]) / area;
    const Rational w2 = cross(t[0], t[1], p) / area;
    if (w0 < 0 || w1 < 0 || w2 < 0) return std::nullopt;
    return w0 * apex_value;
}

// Bracketing rationals for pi from Machin's formula
// pi = 16 atan(1/5) - 4 atan(1/239); the alternating series partial sums
// bracket each arctangent.
struct Interval {
    Rational lo, hi;
};

inline Interval atan_inv(long k, int terms) {
    Rational sum = 0, prev = 0;
    Rational x = Rational(1, k), x2 = x * x, pow = x;
    for (int i = 0; i < terms; ++i) {
        prev = sum;
        sum += (i % 2 == 0 ? 1 : -1) * pow / (2 * i + 1);
        pow *= x2;
    }
    // Consecutive partial sums bracket the limit.
    return sum < prev ? Interval{sum, prev} : Interval{prev, sum};
}

inline Interval pi_interval(int digits = 50) {
    // Each term of atan(1/5) gains ~1.4 digits.
    const int terms = digits + 5;
    const Interval a = atan_inv(5, terms), b = atan_inv(239, terms);
    return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

// chi(S^m Omega) on a smooth surface with K^2 = k2, c2 = c2, chi(O) = (k2 + c2)/12,
// summing Riemann-Roch over the line-bundle pieces with first Chern class
// i*a + (m-i)*b, a + b = K, ab = c2, symmetrised in (a, b).
inline Rational chi_symmetric_power_by_roots(const Rational& k2, const Rational& c2, std::int64_t m) {
    const Rational chi_o = (k2 + c2) / 12;
    Rational total = 0;
    for (std::int64_t i = 0; i <= m; ++i) {
        const Rational ii(static_cast<long>(i)), jj(static_cast<long>(m - i)), mm(static_cast<long>(m));
        const Rational c1_sq = (ii * ii + jj * jj) * (k2 - 2 * c2) / 2 + 2 * ii * jj * c2;
        const Rational c1_k = mm * k2 / 2;
        total += chi_o + (c1_sq - c1_k) / 2;
    }
    return total;
}

}  // namespace anloc::oracle
