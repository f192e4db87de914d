#include <gtest/gtest.h>

#include "anloc/errors.hpp"
#include "anloc/klyachko.hpp"
#include "anloc/polytopes.hpp"

using namespace anloc;
using namespace anloc::polytopes;

namespace {

Point3 pt(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

// Lattice points by testing every point of the bounding box.
std::int64_t brute_count(const HalfOpenPolytope& p, std::int64_t t) {
    Rational lo[3], hi[3];
    for (int k = 0; k < 3; ++k) {
        lo[k] = hi[k] = 0;
    }
    bool first = true;
    for (const auto& v : p.vertices()) {
        const Rational c[3] = {v.x, v.y, v.z};
        for (int k = 0; k < 3; ++k) {
            if (first || c[k] < lo[k]) lo[k] = c[k];
            if (first || c[k] > hi[k]) hi[k] = c[k];
        }
        first = false;
    }
    const Rational s(static_cast<long>(t));
    std::int64_t count = 0;
    for (auto x = to_int64(floor(lo[0] * s)); x <= to_int64(ceil(hi[0] * s)); ++x)
        for (auto y = to_int64(floor(lo[1] * s)); y <= to_int64(ceil(hi[1] * s)); ++y)
            for (auto z = to_int64(floor(lo[2] * s)); z <= to_int64(ceil(hi[2] * s)); ++z)
                if (contains(p, pt(x, y, z), t)) ++count;
    return count;
}

}  // namespace

TEST(Hull, UnitCubeFacets) {
    std::vector<Point3> v;
    for (long x : {0, 1})
        for (long y : {0, 1})
            for (long z : {0, 1}) v.push_back(pt(x, y, z));
    const HalfOpenPolytope cube(v, {});
    EXPECT_EQ(cube.facets().size(), 6u);
    EXPECT_EQ(volume(cube), 1);
    for (std::int64_t t = 0; t <= 4; ++t) EXPECT_EQ(count_lattice(cube, t), (t + 1) * (t + 1) * (t + 1));
}

TEST(Hull, HalfOpenCubeDropsAFace) {
    std::vector<Point3> v;
    for (long x : {0, 1})
        for (long y : {0, 1})
            for (long z : {0, 1}) v.push_back(pt(x, y, z));
    const auto cube = HalfOpenPolytope::from_points(v, {{pt(0, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(0, 1, 1)}});
    for (std::int64_t t = 1; t <= 4; ++t) EXPECT_EQ(count_lattice(cube, t), t * (t + 1) * (t + 1));
}

TEST(Hull, Errors) {
    EXPECT_THROW(HalfOpenPolytope({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)}, {}), DegenerateHullError);
    const std::vector<Point3> simplex{pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
    EXPECT_NO_THROW(HalfOpenPolytope(simplex, {{0, 1}}));  // an edge
    // Octahedron: two opposite vertices are not a face.
    const std::vector<Point3> oct{pt(1, 0, 0), pt(-1, 0, 0), pt(0, 1, 0), pt(0, -1, 0), pt(0, 0, 1), pt(0, 0, -1)};
    EXPECT_THROW(HalfOpenPolytope(oct, {{0, 1}}), InvalidFaceError);
    EXPECT_THROW(HalfOpenPolytope(simplex, {{0, 7}}), DomainError);
}

TEST(Pieces, VerticesAndTau) {
    EXPECT_EQ(vertex_p(1), (Point3{make_rational(-1, 2), 0, 0}));
    EXPECT_EQ(vertex_q(1), (Point3{make_rational(-1, 3), make_rational(-1, 3), make_rational(1, 3)}));
    for (std::int64_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(tau_apply(n, vertex_p(n)), (Point3{make_rational(1, n + 1), -1, 0}));
        EXPECT_EQ(tau_apply(n, vertex_q(n)), (Point3{make_rational(2, (n + 1) * (n + 2)), -1, make_rational(n, n + 2)}));
        EXPECT_EQ(tau_apply(n, tau_apply(n, vertex_q(n - 1))), vertex_q(n - 1));
    }
}

TEST(Pieces, VolumesMatchClosedForms) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto pieces = an_pieces(n);
        EXPECT_EQ(volume(pieces.c), make_rational(n * (n + 4), 6 * (n + 1) * (n + 2) * (n + 2))) << n;
        EXPECT_EQ(volume(pieces.p[n - 1]), make_rational(n * n + 3 * n - 2, 6 * n * (n + 1) * (n + 1) * (n + 2))) << n;
    }
}

TEST(Pieces, SmallLatticeCounts) {
    const auto p1 = an_pieces(1).p[0];
    const std::vector<std::int64_t> expect_p1{0, 0, 0, 1, 2, 4, 7};
    for (std::int64_t t = 1; t <= 7; ++t) EXPECT_EQ(count_lattice(p1, t), expect_p1[t - 1]) << t;
    const auto c2 = an_pieces(2).c;
    const std::vector<std::int64_t> expect_c2{0, 0, 1, 4, 7};
    for (std::int64_t t = 1; t <= 5; ++t) EXPECT_EQ(count_lattice(c2, t), expect_c2[t - 1]) << t;
}

TEST(Pieces, CountAgreesWithMembershipScan) {
    for (std::int64_t n = 1; n <= 3; ++n) {
        const auto pieces = an_pieces(n);
        for (std::int64_t t = 1; t <= 14; ++t) {
            EXPECT_EQ(count_lattice(pieces.c, t), brute_count(pieces.c, t));
            for (const auto& p : pieces.p) EXPECT_EQ(count_lattice(p, t), brute_count(p, t));
        }
    }
}

TEST(Pieces, DecompositionCountsChiZero) {
    for (std::int64_t n = 1; n <= 3; ++n) {
        const auto pieces = an_pieces(n);
        for (std::int64_t m = 0; m <= 8; ++m) {
            std::int64_t total = count_lattice(pieces.c, m + 1);
            for (const auto& p : pieces.p) total += 2 * count_lattice(p, m + 1);
            EXPECT_EQ(total, klyachko::z_total(n, m)) << n << " " << m;
        }
    }
}

TEST(Ehrhart, LeadingCoefficientIsVolume) {
    for (std::int64_t n = 1; n <= 3; ++n) {
        const auto pieces = an_pieces(n);
        const auto q = ehrhart(pieces.c);
        EXPECT_EQ(q.period() % denominator_lcm(pieces.c), 0);
        for (const auto& c : q.coefficient(3)) EXPECT_EQ(c, volume(pieces.c));
        for (std::int64_t t = 1; t <= 3 * q.period(); ++t) EXPECT_EQ(q(t), count_lattice(pieces.c, t));
    }
}

TEST(Weighted, BoxMatchesDeltaSum) {
    for (std::int64_t n = 1; n <= 5; ++n)
        for (std::int64_t m = 1; m <= 14; ++m) EXPECT_EQ(weighted_count_box(n, m), klyachko::delta_total(n, m)) << n << " " << m;
}

TEST(Weighted, HandCounts) {
    EXPECT_EQ(weighted_count_box(1, 1), 1);
    EXPECT_EQ(weighted_count_delta(1, 1), 1);
    EXPECT_EQ(weighted_count_delta(1, 2), 6);
    EXPECT_EQ(weighted_count_delta(2, 3), 26);
    EXPECT_EQ(weighted_count_delta(3, 0), 0);
}

TEST(Weighted, GammaOnlyAtOddM) {
    const std::vector<WeightedAtom> g{{AtomKind::Gamma, 0, 0, 1}};
    EXPECT_EQ(weighted_count(g, 2), 0);
    EXPECT_EQ(weighted_count(g, 3), 2);
}
