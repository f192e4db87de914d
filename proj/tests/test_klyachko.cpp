#include <gtest/gtest.h>

#include <random>

#include "anloc/errors.hpp"
#include "anloc/klyachko.hpp"
#include "oracles.hpp"

using namespace anloc;
using namespace anloc::klyachko;

TEST(Lambda, Breakpoints) {
    EXPECT_EQ(lambda(3, -5), 0);
    EXPECT_EQ(lambda(3, -3), 0);
    EXPECT_EQ(lambda(3, -1), 2);
    EXPECT_EQ(lambda(3, 1), 4);
    EXPECT_EQ(lambda(3, 9), 4);
    for (std::int64_t m1 = 1; m1 < 6; ++m1)
        for (std::int64_t i = -8; i < 8; ++i) EXPECT_EQ(lambda_shifted(m1, i), lambda(m1 - 1, i + 1));
}

TEST(FiltrationDim, SingleRayIsComplementOfLambda) {
    for (std::int64_t m = 0; m <= 5; ++m) {
        for (std::int64_t j = -m - 2; j <= 3; ++j) {
            const RayLevel r{2, j};
            EXPECT_EQ(filtration_dim(m, std::span(&r, 1)), m + 1 - lambda(m, j));
            EXPECT_EQ(filtration_dim_oracle(m, std::span(&r, 1)), m + 1 - lambda(m, j));
        }
    }
}

TEST(FiltrationDim, RandomAgreementWithOracle) {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> msz(0, 8), cnt(1, 4), slope(-6, 6);
    for (int iter = 0; iter < 400; ++iter) {
        const std::int64_t m = msz(rng);
        std::uniform_int_distribution<std::int64_t> lvl(-m - 2, 2);
        std::vector<RayLevel> levels;
        std::vector<std::int64_t> used;
        const int k = cnt(rng);
        while (static_cast<int>(levels.size()) < k) {
            const std::int64_t s = slope(rng);
            if (std::find(used.begin(), used.end(), s) != used.end()) continue;
            used.push_back(s);
            levels.push_back({s, lvl(rng)});
        }
        EXPECT_EQ(filtration_dim(m, levels), filtration_dim_oracle(m, levels)) << "m=" << m;
    }
}

TEST(FiltrationDim, DuplicateRay) {
    const std::vector<RayLevel> dup{{1, 0}, {1, -1}};
    EXPECT_THROW(filtration_dim(3, dup), DuplicateRayError);
    EXPECT_THROW(filtration_dim_oracle(3, dup), DuplicateRayError);
}

TEST(Delta, ApexValue) {
    // (m+1)/2 at the apex (0, 1 - (m+1)/2) for odd m.
    EXPECT_EQ(delta_pointwise(1, 3, {0, -1}), 2);
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t m = 1; m <= 11; m += 2) EXPECT_EQ(delta_pointwise(n, m, {0, 1 - (m + 1) / 2}), (m + 1) / 2);
}

TEST(Delta, PiecewiseLinearOnSixTriangles) {
    for (std::int64_t n = 1; n <= 3; ++n) {
        for (std::int64_t m = 1; m <= 6; ++m) {
            const auto tris = oracle::delta_triangles(n, m);
            const Box b = delta_box(m);
            for (std::int64_t u1 = b.lo1; u1 <= b.hi1; ++u1) {
                for (std::int64_t u2 = b.lo2; u2 <= b.hi2; ++u2) {
                    const oracle::Pt p{Rational(static_cast<long>(u1)), Rational(static_cast<long>(u2))};
                    Rational expect = 0;
                    for (const auto& t : tris) {
                        if (auto v = oracle::interpolate(t, p, make_rational(m + 1, 2))) expect = *v;
                    }
                    EXPECT_EQ(Rational(static_cast<long>(delta_pointwise(n, m, {u1, u2}))), expect)
                        << "n=" << n << " m=" << m << " u=(" << u1 << "," << u2 << ")";
                }
            }
        }
    }
}

TEST(Delta, TotalsAndSentinel) {
    EXPECT_EQ(delta_total(1, 0), 0);
    EXPECT_EQ(delta_total(1, 1), 1);
    EXPECT_EQ(delta_total(1, 2), 6);
    // A codimension that never saturates leaves delta nonzero far away.
    auto broken = +[](std::int64_t m, std::int64_t i) { return i <= -m ? std::int64_t{0} : i + m; };
    EXPECT_THROW(delta_total(1, 2, broken), SentinelError);
}

TEST(ZValue, TauInvariance) {
    for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t m = 0; m <= 6; ++m) {
            const Box b = z_box(n, m);
            for (std::int64_t a = b.lo1; a <= b.hi1; ++a)
                for (std::int64_t c = b.lo2; c <= b.hi2; ++c) {
                    const ShiftedWeight p{a, c};
                    EXPECT_EQ(z_value(n, m, p), z_value(n, m, tau(n, p)));
                }
        }
    }
}

TEST(ZValue, ChiZeroSmallValues) {
    const std::vector<std::int64_t> expect{0, 0, 3, 8, 15, 28};
    for (std::int64_t m = 0; m <= 5; ++m) EXPECT_EQ(z_total(2, m), expect[m]);
}

TEST(ZValue, MatchesDefinitionThroughFiltrationDims) {
    // z_m(a,b) from the dimension formula with explicit rays: rho_0, rho_{n+1}
    // cut the punctured sections, the middle rays the extendable ones.
    for (std::int64_t n = 1; n <= 3; ++n) {
        for (std::int64_t m = 1; m <= 4; ++m) {
            const Box b = z_box(n, m);
            for (std::int64_t a = b.lo1; a <= b.hi1; ++a) {
                for (std::int64_t c = b.lo2; c <= b.hi2; ++c) {
                    const Weight u = ShiftedWeight{a, c}.unshifted();
                    std::vector<RayLevel> outer{{0, ray_pairing(0, u)}, {n + 1, ray_pairing(n + 1, u)}};
                    std::vector<RayLevel> all = outer;
                    for (std::int64_t i = 1; i <= n; ++i) all.push_back({i, ray_pairing(i, u)});
                    const std::int64_t expect = filtration_dim_oracle(m, outer) - filtration_dim_oracle(m, all);
                    EXPECT_EQ(z_value(n, m, {a, c}), expect) << n << " " << m << " " << a << " " << c;
                }
            }
        }
    }
}
