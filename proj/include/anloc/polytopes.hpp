#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anloc/exact/quasi_polynomial.hpp"
#include "anloc/exact/rational.hpp"

namespace anloc::polytopes {

struct Point3 {
    Rational x, y, z;
    friend bool operator==(const Point3&, const Point3&) = default;
};

// Vertices of the pieces of the chi^0 counting region, in shifted
// coordinates (a, b, z).
Point3 vertex_p(std::int64_t i);  // (-1/(i+1), 0, 0)
Point3 vertex_q(std::int64_t i);  // (-2/((i+1)(i+2)), -i/(i+2), i/(i+2))
Point3 vertex_z();                // (0, -1, 0)

// (a, b, z) |-> (-a, (n+1)a + b, z). Unimodular and an involution.
Point3 tau_apply(std::int64_t n, const Point3& p);

// Supporting inequality a*x + b*y + c*z <= rhs (scaled by the dilation
// factor when testing a dilate), primitive integer coefficients.
struct Halfspace {
    Integer a, b, c, rhs;
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

// Closed convex hull of a vertex set with some faces removed. Facets come from
// exhaustive plane enumeration over vertex triples, which is fine for the
// handful of vertices used here.
class HalfOpenPolytope {
public:
    // Duplicated vertices are merged and face indices remapped. Throws
    // DegenerateHullError for flat vertex sets and InvalidFaceError when a
    // removed subset is not exactly the vertex set of a face.
    HalfOpenPolytope(std::vector<Point3> vertices, std::vector<std::vector<std::size_t>> removed_faces);

    // Convenience: faces given by their vertices.
    static HalfOpenPolytope from_points(std::vector<Point3> vertices,
                                        const std::vector<std::vector<Point3>>& removed_faces);

    const std::vector<Point3>& vertices() const { return vertices_; }
    const std::vector<std::vector<std::size_t>>& removed_faces() const { return removed_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    // One inequality per removed face, tight exactly on that face.
    const std::vector<Halfspace>& removed_supports() const { return strict_; }
    // Vertex indices on each facet (parallel to facets()).
    const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }

private:
    std::vector<Point3> vertices_;
    std::vector<std::vector<std::size_t>> removed_;
    std::vector<Halfspace> facets_;
    std::vector<std::vector<std::size_t>> facet_vertices_;
    std::vector<Halfspace> strict_;
};

struct AnPieces {
    HalfOpenPolytope c;               // the central piece C_n
    std::vector<HalfOpenPolytope> p;  // p[i-1] is P_i, i = 1..n
};

// The convex pieces whose union, together with the tau_n images of the P_i,
// is the chi^0 counting region of the A_n singularity.
AnPieces an_pieces(std::int64_t n);

// pt in t*hull and outside t*F for every removed face F.
bool contains(const HalfOpenPolytope& poly, const Point3& pt, std::int64_t t);

// #(t*poly ∩ Z^3), t >= 0.
std::int64_t count_lattice(const HalfOpenPolytope& poly, std::int64_t t);

// Exact volume of the closed hull.
Rational volume(const HalfOpenPolytope& poly);

// Smallest positive integer scaling every vertex into Z^3.
std::int64_t denominator_lcm(const HalfOpenPolytope& poly);

// Ehrhart quasi-polynomial t |-> count_lattice(poly, t), valid for t >= 1,
// with period denominator_lcm(poly) and degree 3. Throws VerificationError if
// the fit fails its held-out samples or its leading coefficient differs from
// the volume.
QuasiPolynomial ehrhart(const HalfOpenPolytope& poly);

// ---- planar weighted counts -------------------------------------------------
//
// Atoms are subsets of the triangle with base [a, b] on the x-axis and apex
// gamma = (0, 1/2). Every triangle kind excludes gamma; the open variants also
// exclude the closed segment from the corresponding base vertex to gamma.

enum class AtomKind {
    TriangleClosed,
    TriangleLeftOpen,
    TriangleRightOpen,
    TriangleOpen,
    Segment,  // segment from (a, 0) to gamma, without gamma
    Gamma,    // the single point gamma
};

struct WeightedAtom {
    AtomKind kind;
    Rational a;
    Rational b;
    std::int64_t multiplicity;
};

// Multiset whose (m+1)-dilate carries delta_n(m) as a y-weighted lattice sum.
std::vector<WeightedAtom> box_atoms(std::int64_t n);
// Multiset whose (m+1)-dilate carries chi_loc(n, m) likewise.
std::vector<WeightedAtom> delta_atoms(std::int64_t n);

// sum of y over lattice points (x, y) of the (m+1)-dilate of each atom,
// times its multiplicity. The dilated gamma is a lattice point only for odd m.
std::int64_t weighted_count(std::span<const WeightedAtom> atoms, std::int64_t m);

std::int64_t weighted_count_box(std::int64_t n, std::int64_t m);
std::int64_t weighted_count_delta(std::int64_t n, std::int64_t m);

}  // namespace anloc::polytopes
