#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anloc/exact/rational.hpp"

namespace anloc::hyperbolicity {

// Chern data of a smooth degree-d surface in P^3.
Integer k_squared(std::int64_t d);  // d(d-4)^2
Integer c2(std::int64_t d);         // d^3 - 4d^2 + 6d
Rational chi_o(std::int64_t d);     // (K^2 + c2) / 12

// chi(Z, S^m Omega) for smooth Z of degree d, by Riemann-Roch summed over the
// Chern roots of S^m Omega.
Integer chi_smooth(std::int64_t d, std::int64_t m);

// -(2d^2 - 5d)/3
Rational chi_smooth_cubic(std::int64_t d);

// Degree d >= 5 surface with r singular points of type A_n.
struct SurfaceProfile {
    std::int64_t d = 5;
    std::int64_t n = 1;
    std::int64_t r = 0;
};
// Throws DomainError unless d >= 5, n >= 1, r >= 0.
void check_profile(const SurfaceProfile& p);

// chi_smooth(d, m) + r * chi1(n, m). Only valid for m >= 3 (DomainError otherwise).
Integer h0_lower_bound(const SurfaceProfile& p, std::int64_t m);

// m^3 coefficient of h0_lower_bound.
Rational h0_cubic_coefficient(const SurfaceProfile& p);

// Smallest r making the m^3 coefficient strictly positive.
std::int64_t r_min(std::int64_t d, std::int64_t n);

// floor((2/3)(d-1)^2 d (n+1)/(2n+1))
std::int64_t miyaoka_max(std::int64_t d, std::int64_t n);

struct LabsVerdict {
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::int64_t available = 0;
    std::int64_t required = 0;
    bool verdict = false;
};
// Degree 2k with 4k^2 points of type A_{k-1}. k = 2 has degree 4 and is rejected.
LabsVerdict labs_check(std::int64_t k);

struct RdnCell {
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::int64_t r = 0;
    bool flagged = false;  // missing from the published table
};

struct RdnTable {
    std::int64_t d_max = 0;
    std::int64_t n_max = 0;
    std::vector<RdnCell> cells;  // row-major, d outer

    const RdnCell& at(std::int64_t d, std::int64_t n) const;
};

inline constexpr const char* kFlagNote = "missing from the published table";

RdnTable rdn_table(std::int64_t d_max, std::int64_t n_max);

std::string to_csv(const RdnTable& t);
std::string to_markdown(const RdnTable& t);
std::string to_tex(const RdnTable& t);

}  // namespace anloc::hyperbolicity
