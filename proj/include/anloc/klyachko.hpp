#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace anloc::klyachko {

// Character lattice point u = (u1, u2) in M = Z^2.
struct Weight {
    std::int64_t u1 = 0;
    std::int64_t u2 = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
};

// Pairing with the ray through (i, 1): i*u1 + u2.
constexpr std::int64_t ray_pairing(std::int64_t i, const Weight& u) { return i * u.u1 + u.u2; }

// Coordinates (a, b) with (u1, u2) = (a, b + 1).
struct ShiftedWeight {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const ShiftedWeight&, const ShiftedWeight&) = default;
    Weight unshifted() const { return {a, b + 1}; }
};

// Codimension of the level-i step of the filtration on S^m:
// 0 for i <= -m, i + m on [-m, 1], m + 1 for i >= 1.
std::int64_t lambda(std::int64_t m, std::int64_t i);

// lambda(m1 - 1, i + 1): 0 for i <= -m1, i + m1 on [-m1, 0], m1 for i >= 0.
std::int64_t lambda_shifted(std::int64_t m1, std::int64_t i);

// Filtration level j imposed along the ray with slope i, i.e. through (i, 1).
struct RayLevel {
    std::int64_t slope = 0;
    std::int64_t level = 0;
};

// dim of the intersection of the given filtration steps in S^m(k^2), by the
// closed form max{0, m + 1 - sum lambda_m(level)}. Throws DuplicateRayError.
std::int64_t filtration_dim(std::int64_t m, std::span<const RayLevel> levels);

// Same dimension computed from scratch: each step is realized as an explicit
// span of degree-m binary forms and the intersection is found by exact
// Gaussian elimination. Throws DuplicateRayError.
std::int64_t filtration_dim_oracle(std::int64_t m, std::span<const RayLevel> levels);

// Signature of lambda(); the delta routines accept a replacement so that
// validation harnesses can run them against a perturbed codimension.
using LambdaFn = std::int64_t (*)(std::int64_t m, std::int64_t i);

// delta_n(m, u): the change in chi_u of the symmetric powers when the ray
// through (1, 1) is added to the fan of the A_n singularity.
std::int64_t delta_pointwise(std::int64_t n, std::int64_t m, const Weight& u, LambdaFn lam = &lambda);

// Integer box that contains the support of delta_pointwise(n, m, .).
struct Box {
    std::int64_t lo1, hi1, lo2, hi2;
};
Box delta_box(std::int64_t m);

// Sum of delta_pointwise over delta_box(m). Throws SentinelError if the
// summand is nonzero anywhere on the box boundary.
std::int64_t delta_total(std::int64_t n, std::int64_t m, LambdaFn lam = &lambda);

// z_m(a, b): dimension of the u-graded piece of sections on the punctured
// neighbourhood modulo those that extend over the exceptional curves.
std::int64_t z_value(std::int64_t n, std::int64_t m, const ShiftedWeight& p);

// The involution (a, b) |-> (-a, (n+1)a + b) under which z_value is invariant.
constexpr ShiftedWeight tau(std::int64_t n, const ShiftedWeight& p) { return {-p.a, (n + 1) * p.a + p.b}; }

// Box in shifted coordinates containing the support of z_value(n, m, .):
// a in [-(m+1), m+1], b in [-(n+1)(m+1), 0].
Box z_box(std::int64_t n, std::int64_t m);

// Sum of z_value over z_box. Throws SentinelError on a nonzero boundary value.
std::int64_t z_total(std::int64_t n, std::int64_t m);

}  // namespace anloc::klyachko
