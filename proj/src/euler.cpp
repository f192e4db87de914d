#include "anloc/euler.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "anloc/errors.hpp"
#include "anloc/klyachko.hpp"
#include "anloc/polytopes.hpp"

namespace anloc::euler {

using anloc::to_string;

namespace {

void require_n(std::int64_t n, std::int64_t lo = 1) {
    if (n < lo) throw DomainError("n must be >= " + std::to_string(lo) + ", got " + std::to_string(n));
}

void require_m(std::int64_t m) {
    if (m < 0) throw DomainError("m must be non-negative, got " + std::to_string(m));
}

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Branch constants b, c of the closed form for residue r = m mod (n+1).
std::pair<Rational, Rational> branch(std::int64_t n, std::int64_t r) {
    const Rational rr = q(r), nn = q(n);
    Rational c = 2 * rr * rr * rr - 3 * (nn - 1) * rr * rr;
    if (n % 2 == 0) {
        c += (nn * nn - 4 * nn - 2) * rr;
        if (r % 2 == 1) c -= 3 * (nn + 1);
        return {0, c};
    }
    if (r % 2 == 0) return {1, c + (nn * nn - 4 * nn - 5) * rr};
    return {-1, c + (nn * nn - 4 * nn + 1) * rr - 3 * (nn + 1)};
}

std::int64_t sum_l(const polytopes::AnPieces& pieces, std::int64_t t) {
    std::int64_t total = polytopes::count_lattice(pieces.c, t);
    for (const auto& p : pieces.p) total += 2 * polytopes::count_lattice(p, t);
    return total;
}

std::int64_t to_i64_exact(const Rational& r, const char* what) {
    if (!is_integer(r)) throw VerificationError(std::string(what) + " is not an integer: " + to_string(r));
    return to_int64(r);
}

}  // namespace

std::int64_t chi_loc_closed(std::int64_t n, std::int64_t m) {
    require_n(n, 0);
    require_m(m);
    if (n == 0) return 0;
    return to_i64_exact(chi_loc_qpoly(n)(m), "closed form value");
}

RationalFunction chi_loc_genfun(std::int64_t n) {
    require_n(n);
    const auto p = static_cast<std::size_t>(n + 1);
    const Polynomial ones = Polynomial::geometric(p);
    Polynomial num = Polynomial::monomial(1, 1) * (q(n + 1) * ones * ones - Polynomial::geometric(p, 2));
    const Polynomial one_minus_z{1, -1};
    const Polynomial one_minus_zp = Polynomial::constant(1) - Polynomial::monomial(1, p);
    return {std::move(num), one_minus_z * one_minus_z * one_minus_zp * one_minus_zp};
}

std::vector<std::int64_t> chi_loc_series(std::int64_t n, std::size_t count) {
    const auto coeffs = series_coefficients(chi_loc_genfun(n), count);
    std::vector<std::int64_t> out;
    out.reserve(count);
    for (const auto& c : coeffs) out.push_back(to_i64_exact(c, "series coefficient"));
    return out;
}

QuasiPolynomial chi_loc_qpoly(std::int64_t n) {
    require_n(n);
    const Rational p = q(n + 1);
    const Rational lead = (p * p - 1) / p;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n + 1);
    for (std::int64_t r = 0; r <= n; ++r) {
        const auto [b, c] = branch(n, r);
        // lead * (m^3/6 + m^2/2 + m/4) + b m / (4p) + c / (12p)
        rows.push_back({c / (12 * p), lead / 4 + b / (4 * p), lead / 2, lead / 6});
    }
    return {n + 1, 3, std::move(rows)};
}

std::int64_t chi_loc_delta(std::int64_t n, std::int64_t m) {
    require_n(n);
    require_m(m);
    std::int64_t total = 0;
    for (std::int64_t k = 1; k <= n; ++k) total += klyachko::delta_total(k, m);
    return total;
}

std::int64_t chi_loc_weighted(std::int64_t n, std::int64_t m) {
    require_n(n);
    require_m(m);
    return polytopes::weighted_count_delta(n, m);
}

std::int64_t chi0_direct(std::int64_t n, std::int64_t m) {
    require_n(n);
    require_m(m);
    return klyachko::z_total(n, m);
}

std::int64_t chi0_polytopes(std::int64_t n, std::int64_t m) {
    require_n(n);
    require_m(m);
    return sum_l(polytopes::an_pieces(n), m + 1);
}

QuasiPolynomial chi0_qpoly(std::int64_t n) {
    require_n(n);
    static std::mutex mu;
    static std::map<std::int64_t, QuasiPolynomial> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    const auto pieces = polytopes::an_pieces(n);
    QuasiPolynomial total = polytopes::ehrhart(pieces.c);
    for (const auto& p : pieces.p) total = total + Rational(2) * polytopes::ehrhart(p);
    total = total.shifted(1);
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(total)).first->second;
}

Rational g0_volume(std::int64_t n) {
    require_n(n);
    const auto pieces = polytopes::an_pieces(n);
    Rational total = polytopes::volume(pieces.c);
    for (const auto& p : pieces.p) total += 2 * polytopes::volume(p);
    return total;
}

std::int64_t chi1(std::int64_t n, std::int64_t m) {
    const std::int64_t out = chi_loc_closed(n, m) - chi0_direct(n, m);
    if (out < 0) {
        throw NegativityError("chi1(" + std::to_string(n) + ", " + std::to_string(m) + ") = " +
                              std::to_string(out));
    }
    return out;
}

Rational chi1_cubic_coefficient(std::int64_t n) {
    require_n(n);
    return make_rational(n * (n + 2), 6 * (n + 1)) - g0_volume(n);
}

ChiReport chi_report(std::int64_t n, std::int64_t m) {
    ChiReport r{n, m, chi_loc_closed(n, m), chi0_direct(n, m), 0, false};
    r.chi1 = r.chi_loc - r.chi0;
    if (r.chi1 < 0) throw NegativityError("chi1 is negative at n=" + std::to_string(n) + ", m=" + std::to_string(m));
    const auto series = chi_loc_series(n, static_cast<std::size_t>(m) + 1);
    r.methods_agreed = series[m] == r.chi_loc && chi_loc_delta(n, m) == r.chi_loc &&
                       (m == 0 || chi_loc_weighted(n, m) == r.chi_loc) && chi0_polytopes(n, m) == r.chi0;
    return r;
}

// ---- coefficient identities -----------------------------------------------------

std::vector<Integer> g_numerator_coefficients(std::int64_t n) {
    require_n(n);
    const auto p = static_cast<std::size_t>(n + 1);
    const Polynomial odd = Polynomial::monomial(1, 1) * Polynomial::geometric(p, 2);
    const Polynomial ones = Polynomial::geometric(p);
    const Polynomial g = odd * ones * ones;
    std::vector<Integer> out(4 * p);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[i].get_num();
    return out;
}

std::optional<std::string> coefficient_identity_violation(std::int64_t n) {
    const auto a = g_numerator_coefficients(n);
    const std::int64_t p = n + 1;
    const Rational pp = q(p) * q(p);
    for (std::int64_t r = 0; r <= n; ++r) {
        const Rational a0(a[r]), a1(a[p + r]), a2(a[2 * p + r]), a3(a[3 * p + r]);
        const Rational rr = q(r);
        auto fail = [&](int which, const Rational& lhs, const Rational& rhs) {
            return "identity " + std::to_string(which) + " fails at n=" + std::to_string(n) + ", q=" +
                   std::to_string(r) + ": " + to_string(lhs) + " != " + to_string(rhs);
        };
        if (Rational lhs = a0 + a1 + a2 + a3; lhs != pp) return fail(1, lhs, pp);
        if (Rational lhs = 2 * a0 + a1 - a3, rhs = q(p) * (rr + 1); lhs != rhs) return fail(2, lhs, rhs);
        Rational rhs3 = pp / 2 + 3 * rr * (rr + 2);
        if (n % 2 == 1 && r % 2 == 1) rhs3 += 3;
        if (n % 2 == 0) rhs3 += make_rational(3, 2);
        if (Rational lhs = 11 * a0 + 2 * a1 - a2 + 2 * a3; lhs != rhs3) return fail(3, lhs, rhs3);
        const Rational rhs4 = r % 2 == 0 ? Rational(rr * (rr + 2) / 4) : Rational((rr + 1) * (rr + 1) / 4);
        if (a0 != rhs4) return fail(4, a0, rhs4);
    }
    return std::nullopt;
}

Polynomial parallelepiped_side(std::int64_t n) {
    require_n(n);
    const std::int64_t p = n + 1;
    // Level n+1 holds the points with first coordinate 2..2(n+1)^2-2.
    Polynomial s = Polynomial::constant(1) + Polynomial::monomial(q(2 * p * p - 3), p);
    for (std::int64_t k = 1; k <= n; ++k) {
        s += Polynomial::monomial(q(2 * p * k - 1), k) + Polynomial::monomial(q(2 * p * k - 1), 2 * p - k);
    }
    const Polynomial one_minus_zp = Polynomial::constant(1) - Polynomial::monomial(1, p);
    return Rational(2) * s - Rational(2) * one_minus_zp + q(n) * one_minus_zp * one_minus_zp;
}

Polynomial factored_side(std::int64_t n) {
    require_n(n);
    const auto p = static_cast<std::size_t>(n + 1);
    const Polynomial ones = Polynomial::geometric(p);
    const Polynomial one_plus_z{1, 1};
    return one_plus_z * one_plus_z * (q(n + 1) * ones * ones - Polynomial::geometric(p, 2));
}

// ---- published reference rows ------------------------------------------------

namespace {

struct Factor {
    std::vector<std::int64_t> coeffs;  // constant term first
    unsigned power = 1;
};

Polynomial product(const std::vector<Factor>& fs) {
    Polynomial out = Polynomial::constant(1);
    for (const auto& f : fs) {
        std::vector<Rational> c;
        for (auto v : f.coeffs) c.push_back(q(v));
        out *= Polynomial(std::move(c)).pow(f.power);
    }
    return out;
}

// Recurring factors.
const std::vector<std::int64_t> kTm1{-1, 1};            // t - 1
const std::vector<std::int64_t> kTp1{1, 1};             // t + 1
const std::vector<std::int64_t> kT2p1{1, 0, 1};         // t^2 + 1
const std::vector<std::int64_t> kPhi3{1, 1, 1};         // t^2 + t + 1
const std::vector<std::int64_t> kPhi6{1, -1, 1};        // t^2 - t + 1
const std::vector<std::int64_t> kPhi5{1, 1, 1, 1, 1};   // t^4 + ... + 1
const std::vector<std::int64_t> kPhi10{1, -1, 1, -1, 1};
const std::vector<std::int64_t> kPhi7{1, 1, 1, 1, 1, 1, 1};
const std::vector<std::int64_t> kPhi15{1, -1, 0, 1, -1, 1, 0, -1, 1};
const std::vector<std::int64_t> kPhi21{1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1};

std::vector<std::int64_t> sparse(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    int deg = 0;
    for (const auto& [e, c] : terms) deg = std::max(deg, e);
    std::vector<std::int64_t> out(deg + 1);
    for (const auto& [e, c] : terms) out[e] += c;
    return out;
}

std::vector<std::int64_t> support(std::initializer_list<int> exps) {
    int deg = 0;
    for (int e : exps) deg = std::max(deg, e);
    std::vector<std::int64_t> out(deg + 1);
    for (int e : exps) out[e] = 1;
    return out;
}

std::vector<std::int64_t> tpow(int k) {
    std::vector<std::int64_t> out(k + 1);
    out[k] = 1;
    return out;
}

void require_reference(std::int64_t n) {
    if (n < 1 || n > kReferenceRows) {
        throw DomainError("reference rows exist for n = 1.." + std::to_string(kReferenceRows));
    }
}

}  // namespace

RationalFunction reference_p_genfun(std::int64_t n) {
    require_reference(n);
    switch (n) {
        case 1:
            return {product({{tpow(3)}}), product({{kPhi3}, {kTp1}, {kTm1, 4}})};
        case 2:
            return {product({{{1, -1, 1, 0, 1}}, {tpow(2)}}),
                    product({{kPhi3, 2}, {kPhi6}, {kTp1}, {kTm1, 4}})};
        case 3:
            return {product({{support({11, 9, 8, 7, 6, 4, 2, 0})}, {tpow(3)}}),
                    product({{kPhi5}, {kPhi10}, {kPhi3}, {kPhi6}, {kT2p1}, {kTp1, 2}, {kTm1, 4}})};
        case 4:
            return {product({{support({18, 16, 14, 13, 12, 11, 10, 9, 7, 5, 4, 2, 0})}, {tpow(4)}}),
                    product({{kPhi15}, {kPhi5, 2}, {kPhi10}, {kPhi3}, {kT2p1}, {kTp1}, {kTm1, 4}})};
        default:
            return {product({{support({28, 25, 23, 22, 20, 19, 18, 17, 16, 15, 14, 12, 11, 9, 8, 6, 5, 3, 0})},
                             {tpow(5)}}),
                    product({{kPhi21}, {kPhi15}, {kPhi7}, {kPhi5}, {kPhi3, 2}, {kPhi6}, {kTp1}, {kTm1, 4}})};
    }
}

RationalFunction reference_c_genfun(std::int64_t n) {
    require_reference(n);
    switch (n) {
        case 1:
            return {product({{{3, 3, 2, 1, 1}}, {tpow(2)}}), product({{kPhi3, 2}, {kTp1, 2}, {kTm1, 4}})};
        case 2:
            return {product({{{1, 2, -1, 0, 1}}, {tpow(2)}}),
                    product({{kPhi3}, {kPhi6}, {kTp1, 2}, {kTm1, 4}})};
        case 3:
            return {product({{sparse({{12, 1}, {10, 1}, {8, 2}, {6, 2}, {5, 2}, {4, 2}, {2, 3}, {0, 1}})},
                             {kPhi3},
                             {tpow(2)}}),
                    product({{kPhi5, 2}, {kPhi10}, {kT2p1}, {kTp1, 2}, {kTm1, 4}})};
        case 4:
            return {product({{sparse({{9, 1}, {7, 1}, {6, -1}, {3, 1}, {2, 1}, {0, 1}})},
                             {kPhi10},
                             {kTp1},
                             {tpow(2)}}),
                    product({{kPhi15}, {kPhi5}, {kPhi3, 2}, {kTm1, 4}})};
        default:
            return {product({{sparse({{24, 1}, {21, 1}, {18, 2}, {15, 2}, {13, 2}, {12, 2}, {11, -2}, {10, 2},
                                      {9, 2}, {7, 2}, {4, 2}, {3, 1}, {0, 1}})},
                             {kPhi5},
                             {tpow(2)}}),
                    product({{kPhi21}, {kPhi7, 2}, {kPhi3}, {kPhi6}, {kTp1, 2}, {kTm1, 4}})};
    }
}

// ---- cross-validation ----------------------------------------------------------

Methods Methods::standard() {
    return {&euler::chi_loc_closed, &euler::chi_loc_genfun, &euler::chi_loc_delta, &euler::chi_loc_weighted,
            &euler::chi0_direct,    &euler::chi0_polytopes, &euler::chi0_qpoly};
}

namespace {

// Upper breakpoint one step early: saturates at m instead of m + 1. (A uniform
// shift in i would only translate the weight lattice and go unnoticed.)
std::int64_t lambda_off_by_one(std::int64_t m, std::int64_t i) { return std::min(klyachko::lambda(m, i), m); }

std::int64_t chi0_polytopes_flipped(std::int64_t n, std::int64_t m) {
    require_n(n);
    using polytopes::HalfOpenPolytope;
    auto pieces = polytopes::an_pieces(n);
    const auto z = polytopes::vertex_z();
    for (std::int64_t i = 1; i <= n; ++i) {
        const auto p0 = polytopes::vertex_p(i - 1), q0 = polytopes::vertex_q(i - 1);
        const auto p1 = polytopes::vertex_p(i), q1 = polytopes::vertex_q(i);
        pieces.p[i - 1] = HalfOpenPolytope::from_points({p0, q0, p1, q1, z}, {{p0, q0, z}, {p0, p1, z}});
    }
    return sum_l(pieces, m + 1);
}

}  // namespace

Methods mutated(Mutation mutation) {
    Methods out = Methods::standard();
    switch (mutation) {
        case Mutation::HalfOpenFaceFlip:
            out.chi0_polytopes = &chi0_polytopes_flipped;
            break;
        case Mutation::LambdaOffByOne:
            out.chi_loc_delta = [](std::int64_t n, std::int64_t m) {
                std::int64_t total = 0;
                for (std::int64_t k = 1; k <= n; ++k) total += klyachko::delta_total(k, m, &lambda_off_by_one);
                return total;
            };
            break;
        case Mutation::GammaHandling:
            out.chi_loc_weighted = [](std::int64_t n, std::int64_t m) -> std::int64_t {
                if (m == 0) return 0;
                auto atoms = polytopes::delta_atoms(n);
                for (auto& a : atoms) {
                    if (a.kind == polytopes::AtomKind::Gamma) ++a.multiplicity;
                }
                return polytopes::weighted_count(atoms, m);
            };
            break;
    }
    return out;
}

std::optional<Mutation> parse_mutation(const std::string& name) {
    if (name == "face-flip") return Mutation::HalfOpenFaceFlip;
    if (name == "lambda-off-by-one") return Mutation::LambdaOffByOne;
    if (name == "gamma") return Mutation::GammaHandling;
    return std::nullopt;
}

std::string to_string(Mutation mutation) {
    switch (mutation) {
        case Mutation::HalfOpenFaceFlip:
            return "face-flip";
        case Mutation::LambdaOffByOne:
            return "lambda-off-by-one";
        case Mutation::GammaHandling:
            return "gamma";
    }
    return "?";
}

ValidationReport validate(std::int64_t n_max, std::int64_t m_max, const Methods& methods) {
    if (n_max < 1 || m_max < 0) throw DomainError("validate needs n_max >= 1 and m_max >= 0");
    ValidationReport rep;
    auto fail = [&](std::string which, std::int64_t n, std::int64_t m, std::string detail) {
        rep.ok = false;
        rep.methods = std::move(which);
        rep.n = n;
        rep.m = m;
        rep.detail = std::move(detail);
        return rep;
    };
    auto mismatch = [](const std::string& a, std::int64_t va, const std::string& b, std::int64_t vb) {
        return a + " gives " + std::to_string(va) + ", " + b + " gives " + std::to_string(vb);
    };

    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::int64_t m = 0;
        std::string stage = "chi_loc genfun";
        try {
            const auto series = series_coefficients(methods.chi_loc_genfun(n), static_cast<std::size_t>(m_max) + 1);
            stage = "chi0 qpoly";
            const QuasiPolynomial q0 = methods.chi0_qpoly(n);
            for (m = 0; m <= m_max; ++m) {
                stage = "chi_loc closed";
                const std::int64_t closed = methods.chi_loc_closed(n, m);
                if (series[m] != Rational(static_cast<long>(closed))) {
                    return fail("closed/genfun", n, m, "closed gives " + std::to_string(closed) +
                                                           ", genfun gives " + to_string(series[m]));
                }
                stage = "chi_loc delta";
                if (auto d = methods.chi_loc_delta(n, m); d != closed) {
                    return fail("closed/delta", n, m, mismatch("closed", closed, "delta", d));
                }
                stage = "chi_loc weighted";
                if (m >= 1) {
                    if (auto w = methods.chi_loc_weighted(n, m); w != closed) {
                        return fail("closed/weighted", n, m, mismatch("closed", closed, "weighted", w));
                    }
                }
                stage = "chi0 direct";
                const std::int64_t direct = methods.chi0_direct(n, m);
                stage = "chi0 polytopes";
                if (auto p = methods.chi0_polytopes(n, m); p != direct) {
                    return fail("direct/polytopes", n, m, mismatch("direct", direct, "polytopes", p));
                }
                if (q0(m) != Rational(static_cast<long>(direct))) {
                    return fail("direct/qpoly", n, m,
                                "direct gives " + std::to_string(direct) + ", qpoly gives " + to_string(q0(m)));
                }
                if (closed < direct) {
                    return fail("chi1 negativity", n, m, mismatch("chi_loc", closed, "chi0", direct));
                }
                ++rep.cells;
            }
        } catch (const CrossCheckError& e) {
            return fail(stage, n, m, e.what());
        }
    }

    const std::int64_t rows = std::min(n_max, kReferenceRows);
    for (std::int64_t n = 1; n <= rows; ++n) {
        try {
            const auto pieces = polytopes::an_pieces(n);
            const auto& pn = pieces.p.back();
            if (!ratfun_equal(qpoly_to_genfun(polytopes::ehrhart(pn), 1), reference_p_genfun(n))) {
                return fail("reference P_n", n, -1, "Ehrhart series of P_n differs from the reference row");
            }
            if (!ratfun_equal(qpoly_to_genfun(polytopes::ehrhart(pieces.c), 1), reference_c_genfun(n))) {
                return fail("reference C_n", n, -1, "Ehrhart series of C_n differs from the reference row");
            }
        } catch (const CrossCheckError& e) {
            return fail("reference rows", n, -1, e.what());
        }
    }
    return rep;
}

}  // namespace anloc::euler
