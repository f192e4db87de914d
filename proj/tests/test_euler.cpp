#include <gtest/gtest.h>

#include "anloc/errors.hpp"
#include "anloc/euler.hpp"
#include "anloc/polytopes.hpp"

using namespace anloc;
using namespace anloc::euler;

TEST(ChiLoc, SmallValues) {
    EXPECT_EQ(chi_loc_closed(1, 0), 0);
    EXPECT_EQ(chi_loc_closed(1, 1), 1);
    EXPECT_EQ(chi_loc_closed(1, 2), 6);
    EXPECT_EQ(chi_loc_closed(2, 2), 10);
    EXPECT_EQ(chi_loc_closed(2, 3), 26);
    EXPECT_EQ(chi_loc_closed(0, 7), 0);
    EXPECT_THROW(chi_loc_closed(1, -1), DomainError);
}

TEST(ChiLoc, FourRoutesAgree) {
    for (std::int64_t n = 1; n <= 5; ++n) {
        const auto series = chi_loc_series(n, 25);
        for (std::int64_t m = 0; m < 25; ++m) {
            const auto c = chi_loc_closed(n, m);
            EXPECT_EQ(series[m], c);
            EXPECT_EQ(chi_loc_delta(n, m), c);
            EXPECT_EQ(chi_loc_weighted(n, m), c);
        }
    }
}

TEST(ChiLoc, LeadingCoefficientGrowsLinearlyInN) {
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (const auto& c : chi_loc_qpoly(n).coefficient(3)) EXPECT_EQ(c, make_rational(n * (n + 2), 6 * (n + 1)));
    }
}

TEST(CoefficientIdentities, IdentitiesHold) {
    for (std::int64_t n = 1; n <= 20; ++n) EXPECT_EQ(coefficient_identity_violation(n), std::nullopt);
}

TEST(CoefficientIdentities, SmallExpansion) {
    // n = 1: (z + z^3)(1 + z)^2 = z + 2z^2 + 2z^3 + 2z^4 + z^5
    const auto a = g_numerator_coefficients(1);
    const std::vector<long> expect{0, 1, 2, 2, 2, 1, 0, 0};
    ASSERT_EQ(a.size(), expect.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], expect[i]);
}

TEST(CoefficientIdentities, PolynomialIdentity) {
    for (std::int64_t n = 1; n <= 15; ++n) EXPECT_EQ(parallelepiped_side(n), factored_side(n)) << n;
}

TEST(ChiZero, PublishedSeriesForN2) {
    const std::vector<std::int64_t> expect{0, 3, 8, 15, 28};
    const auto q = chi0_qpoly(2);
    for (std::int64_t m = 1; m <= 5; ++m) {
        EXPECT_EQ(chi0_direct(2, m), expect[m - 1]);
        EXPECT_EQ(chi0_polytopes(2, m), expect[m - 1]);
        EXPECT_EQ(q(m), expect[m - 1]);
    }
}

TEST(ChiZero, QuasiPolynomialCubicIsG0Volume) {
    for (std::int64_t n = 1; n <= 3; ++n) {
        for (const auto& c : chi0_qpoly(n).coefficient(3)) EXPECT_EQ(c, g0_volume(n));
    }
}

TEST(ChiZero, StabilisesInN) {
    for (std::int64_t m = 0; m <= 6; ++m) {
        const auto base = chi0_direct(m + 1, m);
        for (std::int64_t n = m + 2; n <= 9; ++n) EXPECT_EQ(chi0_direct(n, m), base) << n << " " << m;
    }
}

TEST(ChiOne, NonNegativeAndCubic) {
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t m = 0; m <= 15; ++m) EXPECT_GE(chi1(n, m), 0);
    EXPECT_EQ(chi1_cubic_coefficient(1), make_rational(4, 27));
    EXPECT_EQ(chi1_cubic_coefficient(2), make_rational(67, 216));
}

TEST(ChiOne, ReportAgrees) {
    const auto r = chi_report(2, 5);
    EXPECT_EQ(r.chi_loc, chi_loc_closed(2, 5));
    EXPECT_EQ(r.chi0, 28);
    EXPECT_EQ(r.chi1, r.chi_loc - 28);
    EXPECT_TRUE(r.methods_agreed);
}

TEST(Reference, RowsMatchEhrhartSeries) {
    for (std::int64_t n = 1; n <= 3; ++n) {
        const auto pieces = polytopes::an_pieces(n);
        EXPECT_TRUE(ratfun_equal(qpoly_to_genfun(polytopes::ehrhart(pieces.p.back()), 1), reference_p_genfun(n)));
        EXPECT_TRUE(ratfun_equal(qpoly_to_genfun(polytopes::ehrhart(pieces.c), 1), reference_c_genfun(n)));
    }
    EXPECT_THROW(reference_p_genfun(6), DomainError);
}

TEST(Reference, PublishedCombinationForN2) {
    const auto f = Rational(2) * (reference_p_genfun(1) + reference_p_genfun(2)) + reference_c_genfun(2);
    const auto c = series_coefficients(f, 6);
    const std::vector<long> expect{0, 0, 3, 8, 15, 28};
    for (int i = 0; i < 6; ++i) EXPECT_EQ(c[i], expect[i]);
}

TEST(Validate, CleanBuildPasses) {
    const auto r = validate(3, 12);
    EXPECT_TRUE(r.ok) << r.methods << ": " << r.detail;
    EXPECT_EQ(r.cells, 3 * 13);
}

TEST(Validate, EveryMutationIsCaught) {
    for (auto mu : {Mutation::HalfOpenFaceFlip, Mutation::LambdaOffByOne, Mutation::GammaHandling}) {
        const auto r = validate(3, 12, mutated(mu));
        EXPECT_FALSE(r.ok) << to_string(mu);
        EXPECT_EQ(parse_mutation(to_string(mu)), mu);
    }
    EXPECT_EQ(parse_mutation("nonsense"), std::nullopt);
}
