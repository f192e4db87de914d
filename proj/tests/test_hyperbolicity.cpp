#include <gtest/gtest.h>

#include "anloc/errors.hpp"
#include "anloc/euler.hpp"
#include "anloc/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace anloc;
using namespace anloc::hyperbolicity;

namespace {

// Rows d = 5..10, columns n = 1..6 as published; 0 marks the missing cell.
const std::int64_t kTable[6][6] = {
    {57, 27, 18, 13, 11, 0},  {95, 46, 30, 22, 18, 15},  {142, 68, 45, 33, 27, 22},
    {199, 95, 62, 46, 37, 31}, {264, 126, 83, 61, 49, 41}, {338, 162, 106, 78, 62, 52},
};

}  // namespace

TEST(ChiSmooth, AgreesWithChernRootSum) {
    for (std::int64_t d = 1; d <= 30; ++d) {
        for (std::int64_t m = 0; m <= 12; ++m) {
            const Rational expect =
                oracle::chi_symmetric_power_by_roots(Rational(k_squared(d)), Rational(c2(d)), m);
            EXPECT_EQ(Rational(chi_smooth(d, m)), expect) << d << " " << m;
        }
    }
}

TEST(ChiSmooth, LowPowers) {
    EXPECT_EQ(chi_smooth(5, 0), 5);
    EXPECT_EQ(chi_smooth(5, 1), -45);
    for (std::int64_t d = 1; d <= 12; ++d) {
        EXPECT_EQ(Rational(chi_smooth(d, 0)), chi_o(d));
        EXPECT_EQ(Rational(chi_smooth(d, 1)), 2 * chi_o(d) - Rational(c2(d)));
    }
}

TEST(ChiSmooth, CubicByFiniteDifferences) {
    for (std::int64_t d = 1; d <= 30; ++d) {
        const Integer third = chi_smooth(d, 7) - 3 * chi_smooth(d, 6) + 3 * chi_smooth(d, 5) - chi_smooth(d, 4);
        EXPECT_EQ(Rational(third) / 6, chi_smooth_cubic(d)) << d;
    }
    EXPECT_EQ(chi_smooth_cubic(5), make_rational(-25, 3));
}

TEST(Threshold, PublishedTable) {
    const auto t = rdn_table(10, 6);
    ASSERT_EQ(t.cells.size(), 36u);
    for (std::int64_t d = 5; d <= 10; ++d) {
        for (std::int64_t n = 1; n <= 6; ++n) {
            const auto& c = t.at(d, n);
            if (kTable[d - 5][n - 1] == 0) {
                EXPECT_TRUE(c.flagged);
                EXPECT_EQ(c.r, 9);
            } else {
                EXPECT_FALSE(c.flagged);
                EXPECT_EQ(c.r, kTable[d - 5][n - 1]) << d << " " << n;
            }
        }
    }
}

TEST(Threshold, MonotoneAndSharp) {
    for (std::int64_t d = 5; d <= 10; ++d) {
        for (std::int64_t n = 1; n <= 6; ++n) {
            const auto r = r_min(d, n);
            if (d > 5) EXPECT_GT(r, r_min(d - 1, n));
            if (n > 1) EXPECT_LE(r, r_min(d, n - 1));
            EXPECT_GT(h0_cubic_coefficient({d, n, r}), 0);
            EXPECT_LE(h0_cubic_coefficient({d, n, r - 1}), 0);
        }
    }
    EXPECT_LT(h0_cubic_coefficient({5, 1, 56}), 0);
}

TEST(Threshold, BoundEventuallyPositive) {
    EXPECT_GT(h0_lower_bound({5, 1, 57}, 400), 0);
    EXPECT_GT(h0_lower_bound({10, 1, 345}, 200), 0);
    EXPECT_THROW(h0_lower_bound({5, 1, 57}, 2), DomainError);
    EXPECT_THROW(h0_lower_bound({4, 1, 57}, 5), DomainError);
}

TEST(Miyaoka, Values) {
    EXPECT_EQ(miyaoka_max(10, 1), 360);
    EXPECT_EQ(miyaoka_max(5, 1), 35);
    EXPECT_LE(r_min(10, 1), 345);
    EXPECT_LE(345, miyaoka_max(10, 1));
}

TEST(Labs, Verdicts) {
    const auto k3 = labs_check(3), k4 = labs_check(4), k5 = labs_check(5);
    EXPECT_EQ(k3.required, 46);
    EXPECT_FALSE(k3.verdict);
    EXPECT_EQ(k4.available, 64);
    EXPECT_EQ(k4.required, 62);
    EXPECT_TRUE(k4.verdict);
    EXPECT_EQ(k5.required, 78);
    EXPECT_TRUE(k5.verdict);
    EXPECT_THROW(labs_check(2), DomainError);
}

TEST(Emitters, CsvMarkdownTex) {
    const auto t = rdn_table(10, 6);
    const auto csv = to_csv(t);
    EXPECT_EQ(csv.rfind("d,n,r\n", 0), 0u);
    EXPECT_NE(csv.find("\n5,6,9\n"), std::string::npos);
    EXPECT_NE(csv.find(kFlagNote), std::string::npos);
    EXPECT_NE(to_markdown(t).find("9*"), std::string::npos);
    const auto tex = to_tex(t);
    EXPECT_NE(tex.find("10 & 338 & 162 & 106 & 78 & 62 & 52 \\\\"), std::string::npos);
    EXPECT_NE(tex.find("$^*$"), std::string::npos);
}
