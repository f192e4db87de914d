#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "anloc/exact/quasi_polynomial.hpp"
#include "anloc/exact/rational_function.hpp"

namespace anloc::euler {

// Local Euler characteristic of S^m Omega at an A_n point. All four routes
// return 0 for m = 0, and the closed form returns 0 for n = 0.

// Closed quasi-polynomial, branch picked by the parities of n and m mod (n+1).
std::int64_t chi_loc_closed(std::int64_t n, std::int64_t m);

// z((n+1)(1+...+z^n)^2 - (1+z^2+...+z^2n)) / ((1-z)^2 (1-z^(n+1))^2)
RationalFunction chi_loc_genfun(std::int64_t n);

// Coefficients 0..count-1 of chi_loc_genfun(n).
std::vector<std::int64_t> chi_loc_series(std::int64_t n, std::size_t count);

// Period n+1, degree 3, rows from the closed-form branch tables.
QuasiPolynomial chi_loc_qpoly(std::int64_t n);

// sum_{k=1}^n delta_total(k, m)
std::int64_t chi_loc_delta(std::int64_t n, std::int64_t m);

// y-weighted lattice sum over the (m+1)-dilate of the Delta_n atoms.
std::int64_t chi_loc_weighted(std::int64_t n, std::int64_t m);

// chi^0 by direct summation of z_m over the shifted weight lattice.
std::int64_t chi0_direct(std::int64_t n, std::int64_t m);

// chi^0 = L(C_n, m+1) + 2 sum_i L(P_i, m+1).
std::int64_t chi0_polytopes(std::int64_t n, std::int64_t m);

// The same sum assembled from Ehrhart quasi-polynomials, as a function of m.
QuasiPolynomial chi0_qpoly(std::int64_t n);

// vol C_n + 2 sum_i vol P_i, the cubic coefficient of chi^0.
Rational g0_volume(std::int64_t n);

// chi_loc - chi^0. Throws NegativityError if the difference is negative.
std::int64_t chi1(std::int64_t n, std::int64_t m);

// n(n+2)/(6(n+1)) - g0_volume(n)
Rational chi1_cubic_coefficient(std::int64_t n);

struct ChiReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t chi_loc = 0;
    std::int64_t chi0 = 0;
    std::int64_t chi1 = 0;
    bool methods_agreed = false;
};

// Default-method values plus a check that every route agrees at (n, m).
ChiReport chi_report(std::int64_t n, std::int64_t m);

// ---- coefficient identities -----------------------------------------------------

// a_0..a_{4n+3} with (z + z^3 + ... + z^(2n+1)) (1 + ... + z^n)^2 = sum a_i z^i
// (a_0 = a_{4n+2} = a_{4n+3} = 0).
std::vector<Integer> g_numerator_coefficients(std::int64_t n);

// Description of the first failing identity among the four linear relations
// between a_q, a_{p+q}, a_{2p+q}, a_{3p+q} (p = n+1), or nullopt.
std::optional<std::string> coefficient_identity_violation(std::int64_t n);

// The two sides of the polynomial identity behind the generating function:
// 2 S(z) - 2(1 - z^(n+1)) + n(1 - z^(n+1))^2, with S the lattice-point
// transform of the fundamental parallelepiped specialised at x = y = 1, and
// (1+z)^2 ((n+1)(1+...+z^n)^2 - (1+z^2+...+z^2n)).
Polynomial parallelepiped_side(std::int64_t n);
Polynomial factored_side(std::int64_t n);

// ---- published reference rows ------------------------------------------------

// sum_m L(P_n, m+1) t^m and sum_m L(C_n, m+1) t^m as published, n = 1..5.
RationalFunction reference_p_genfun(std::int64_t n);
RationalFunction reference_c_genfun(std::int64_t n);
inline constexpr std::int64_t kReferenceRows = 5;

// ---- cross-validation ----------------------------------------------------------

// The independently computed routes, swappable so that the harness itself can
// be mutation-tested.
struct Methods {
    std::function<std::int64_t(std::int64_t, std::int64_t)> chi_loc_closed;
    std::function<RationalFunction(std::int64_t)> chi_loc_genfun;
    std::function<std::int64_t(std::int64_t, std::int64_t)> chi_loc_delta;
    std::function<std::int64_t(std::int64_t, std::int64_t)> chi_loc_weighted;
    std::function<std::int64_t(std::int64_t, std::int64_t)> chi0_direct;
    std::function<std::int64_t(std::int64_t, std::int64_t)> chi0_polytopes;
    std::function<QuasiPolynomial(std::int64_t)> chi0_qpoly;

    static Methods standard();
};

// Seeded single-method bugs used to show that validate() notices them.
enum class Mutation {
    HalfOpenFaceFlip,  // P_i drops its other triangular side instead
    LambdaOffByOne,    // lambda saturating one level early inside delta
    GammaHandling,     // apex of the Delta_n triangles counted with them
};
Methods mutated(Mutation mutation);
std::optional<Mutation> parse_mutation(const std::string& name);
std::string to_string(Mutation mutation);

struct ValidationReport {
    bool ok = true;
    std::int64_t cells = 0;  // (n, m) cells compared
    // Set on the first discrepancy.
    std::string methods;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::string detail;
};

// Compares all chi_loc routes for 1 <= n <= n_max, 0 <= m <= m_max (weighted
// route from m = 1), all chi^0 routes on the same grid, and the Ehrhart
// generating functions against the reference rows for n <= min(n_max, 5).
// Stops at the first discrepancy.
ValidationReport validate(std::int64_t n_max, std::int64_t m_max, const Methods& methods = Methods::standard());

}  // namespace anloc::euler
