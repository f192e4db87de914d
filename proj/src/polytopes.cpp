#include "anloc/polytopes.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "anloc/errors.hpp"

namespace anloc::polytopes {

namespace {

struct Vec3 {
    Rational x, y, z;
};

Vec3 operator-(const Point3& p, const Point3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Rational dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
Rational dot(const Vec3& u, const Point3& p) { return u.x * p.x + u.y * p.y + u.z * p.z; }

bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

Rational evaluate(const Halfspace& h, const Point3& p) {
    return Rational(h.a) * p.x + Rational(h.b) * p.y + Rational(h.c) * p.z;
}

// n.p <= d scaled to coprime integers.
Halfspace primitive(const Vec3& n, const Rational& d) {
    Integer den = 1;
    for (const Rational* r : {&n.x, &n.y, &n.z, &d}) den = lcm(den, r->get_den());
    Integer a = Integer(n.x * den), b = Integer(n.y * den), c = Integer(n.z * den), rhs = Integer(d * den);
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rhs.get_mpz_t());
    return {a / g, b / g, c / g, rhs / g};
}

}  // namespace

Point3 vertex_p(std::int64_t i) { return {make_rational(-1, i + 1), 0, 0}; }

Point3 vertex_q(std::int64_t i) {
    return {make_rational(-2, (i + 1) * (i + 2)), make_rational(-i, i + 2), make_rational(i, i + 2)};
}

Point3 vertex_z() { return {0, -1, 0}; }

Point3 tau_apply(std::int64_t n, const Point3& p) {
    return {-p.x, Rational(static_cast<long>(n + 1)) * p.x + p.y, p.z};
}

HalfOpenPolytope::HalfOpenPolytope(std::vector<Point3> vertices, std::vector<std::vector<std::size_t>> removed_faces) {
    std::vector<std::size_t> remap(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto it = std::find(vertices_.begin(), vertices_.end(), vertices[i]);
        remap[i] = static_cast<std::size_t>(it - vertices_.begin());
        if (it == vertices_.end()) vertices_.push_back(vertices[i]);
    }
    const std::size_t nv = vertices_.size();

    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            for (std::size_t k = j + 1; k < nv; ++k) {
                Vec3 normal = cross(vertices_[j] - vertices_[i], vertices_[k] - vertices_[i]);
                if (is_zero(normal)) continue;
                Rational d = dot(normal, vertices_[i]);
                bool below = true, above = true;
                for (const auto& v : vertices_) {
                    const Rational s = dot(normal, v) - d;
                    if (s > 0) below = false;
                    if (s < 0) above = false;
                }
                if (!below && !above) continue;
                if (!below) {
                    normal = {-normal.x, -normal.y, -normal.z};
                    d = -d;
                }
                Halfspace h = primitive(normal, d);
                if (std::find(facets_.begin(), facets_.end(), h) != facets_.end()) continue;
                std::vector<std::size_t> on;
                for (std::size_t v = 0; v < nv; ++v) {
                    if (evaluate(h, vertices_[v]) == Rational(h.rhs)) on.push_back(v);
                }
                facets_.push_back(std::move(h));
                facet_vertices_.push_back(std::move(on));
            }
        }
    }
    // A full-dimensional hull has at least four facets; a flat one yields at
    // most the two orientations of its own plane.
    if (facets_.size() < 4) throw DegenerateHullError("vertex set does not span a 3-dimensional body");

    for (auto& face : removed_faces) {
        std::vector<std::size_t> idx;
        for (auto v : face) {
            if (v >= remap.size()) throw InvalidFaceError("removed face references vertex out of range");
            idx.push_back(remap[v]);
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

        // Sum of the facet inequalities tight on the whole subset; it supports
        // the smallest face containing the subset.
        Halfspace sum{0, 0, 0, 0};
        bool any = false;
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            const auto& fv = facet_vertices_[f];
            if (std::all_of(idx.begin(), idx.end(),
                            [&](std::size_t v) { return std::find(fv.begin(), fv.end(), v) != fv.end(); })) {
                sum.a += facets_[f].a;
                sum.b += facets_[f].b;
                sum.c += facets_[f].c;
                sum.rhs += facets_[f].rhs;
                any = true;
            }
        }
        if (!any || (sum.a == 0 && sum.b == 0 && sum.c == 0)) {
            throw InvalidFaceError("removed vertex subset does not lie on a proper face of the hull");
        }
        for (std::size_t v = 0; v < nv; ++v) {
            const bool in_face = std::binary_search(idx.begin(), idx.end(), v);
            const bool tight = evaluate(sum, vertices_[v]) == Rational(sum.rhs);
            if (in_face != tight) {
                throw InvalidFaceError("removed vertex subset is not the full vertex set of a face");
            }
        }
        removed_.push_back(std::move(idx));
        strict_.push_back(std::move(sum));
    }
}

HalfOpenPolytope HalfOpenPolytope::from_points(std::vector<Point3> vertices,
                                               const std::vector<std::vector<Point3>>& removed_faces) {
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& face : removed_faces) {
        std::vector<std::size_t> idx;
        for (const auto& p : face) {
            auto it = std::find(vertices.begin(), vertices.end(), p);
            if (it == vertices.end()) throw InvalidFaceError("removed face uses a point that is not a vertex");
            idx.push_back(static_cast<std::size_t>(it - vertices.begin()));
        }
        faces.push_back(std::move(idx));
    }
    return HalfOpenPolytope(std::move(vertices), std::move(faces));
}

AnPieces an_pieces(std::int64_t n) {
    if (n < 1) throw DomainError("an_pieces needs n >= 1");
    const Point3 z = vertex_z();
    const Point3 pn = vertex_p(n), qn = vertex_q(n);
    const Point3 pn_t = tau_apply(n, pn), qn_t = tau_apply(n, qn);
    AnPieces out{HalfOpenPolytope::from_points({pn, pn_t, qn, qn_t, z}, {{pn, pn_t, z}}), {}};
    out.p.reserve(n);
    for (std::int64_t i = 1; i <= n; ++i) {
        const Point3 p0 = vertex_p(i - 1), q0 = vertex_q(i - 1), p1 = vertex_p(i), q1 = vertex_q(i);
        out.p.push_back(HalfOpenPolytope::from_points({p0, q0, p1, q1, z}, {{p1, q1, z}, {p0, p1, z}}));
    }
    return out;
}

bool contains(const HalfOpenPolytope& poly, const Point3& pt, std::int64_t t) {
    const Rational scale(static_cast<long>(t));
    for (const auto& h : poly.facets()) {
        if (evaluate(h, pt) > Rational(h.rhs) * scale) return false;
    }
    for (const auto& h : poly.removed_supports()) {
        if (evaluate(h, pt) >= Rational(h.rhs) * scale) return false;
    }
    return true;
}

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

struct Row {
    i128 a, b, c, rhs;  // a x + b y + c z <= rhs (already scaled by t, already tightened if strict)
};

}  // namespace

std::int64_t count_lattice(const HalfOpenPolytope& poly, std::int64_t t) {
    if (t < 0) throw DomainError("dilation factor must be non-negative");
    std::vector<Row> rows;
    auto add = [&](const Halfspace& h, bool strict) {
        Row r{to_int64(h.a), to_int64(h.b), to_int64(h.c), static_cast<i128>(to_int64(h.rhs)) * t};
        if (strict) r.rhs -= 1;  // integer left side: lhs < rhs iff lhs <= rhs - 1
        rows.push_back(r);
    };
    for (const auto& h : poly.facets()) add(h, false);
    for (const auto& h : poly.removed_supports()) add(h, true);

    const Rational scale(static_cast<long>(t));
    Rational xlo = poly.vertices()[0].x, xhi = xlo, ylo = poly.vertices()[0].y, yhi = ylo;
    for (const auto& v : poly.vertices()) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    const std::int64_t x0 = to_int64(ceil(xlo * scale)), x1 = to_int64(floor(xhi * scale));
    const std::int64_t y0 = to_int64(ceil(ylo * scale)), y1 = to_int64(floor(yhi * scale));

    std::int64_t count = 0;
    for (std::int64_t x = x0; x <= x1; ++x) {
        for (std::int64_t y = y0; y <= y1; ++y) {
            // Each row becomes c*z <= rem; intersect the resulting z-ranges.
            i128 zlo = std::numeric_limits<std::int64_t>::min(), zhi = std::numeric_limits<std::int64_t>::max();
            bool feasible = true;
            for (const auto& r : rows) {
                const i128 rem = r.rhs - r.a * x - r.b * y;
                if (r.c > 0) {
                    zhi = std::min(zhi, floor_div(rem, r.c));
                } else if (r.c < 0) {
                    zlo = std::max(zlo, ceil_div(rem, r.c));
                } else if (rem < 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible && zhi >= zlo) count += static_cast<std::int64_t>(zhi - zlo + 1);
        }
    }
    return count;
}

Rational volume(const HalfOpenPolytope& poly) {
    const auto& vs = poly.vertices();
    const Point3& apex = vs[0];
    Rational six_vol = 0;
    for (std::size_t f = 0; f < poly.facets().size(); ++f) {
        const auto& on = poly.facet_vertices()[f];
        if (std::find(on.begin(), on.end(), 0) != on.end()) continue;
        const auto& h = poly.facets()[f];
        const Vec3 normal{Rational(h.a), Rational(h.b), Rational(h.c)};
        // Order the facet polygon around its first vertex.
        const Point3& w0 = vs[on[0]];
        std::vector<std::size_t> rest(on.begin() + 1, on.end());
        std::sort(rest.begin(), rest.end(), [&](std::size_t p, std::size_t q) {
            return dot(normal, cross(vs[p] - w0, vs[q] - w0)) > 0;
        });
        for (std::size_t k = 0; k + 1 < rest.size(); ++k) {
            const Rational det = dot(w0 - apex, cross(vs[rest[k]] - apex, vs[rest[k + 1]] - apex));
            six_vol += abs(det);
        }
    }
    return six_vol / 6;
}

std::int64_t denominator_lcm(const HalfOpenPolytope& poly) {
    Integer l = 1;
    for (const auto& v : poly.vertices()) {
        for (const Rational* r : {&v.x, &v.y, &v.z}) l = lcm(l, r->get_den());
    }
    return to_int64(l);
}

QuasiPolynomial ehrhart(const HalfOpenPolytope& poly) {
    const std::int64_t period = denominator_lcm(poly);
    auto q = qpoly_interpolate(
        period, 3, [&](std::int64_t t) { return Rational(static_cast<long>(count_lattice(poly, t))); }, 1);
    const Rational vol = volume(poly);
    const auto lead = q.coefficient(3);
    for (std::size_t r = 0; r < lead.size(); ++r) {
        if (lead[r] != vol) {
            throw VerificationError("Ehrhart row " + std::to_string(r) + " has leading coefficient " +
                                    to_string(lead[r]) + " but the volume is " + to_string(vol));
        }
    }
    return q;
}

// ---- planar weighted counts -------------------------------------------------

namespace {

// y-weighted count of the (m+1)-dilate of one atom.
std::int64_t atom_weight(const WeightedAtom& atom, std::int64_t m) {
    const std::int64_t m1 = m + 1;
    if (atom.kind == AtomKind::Gamma) return (m1 % 2 == 0) ? m1 / 2 : 0;

    const bool segment = atom.kind == AtomKind::Segment;
    const bool left_open = atom.kind == AtomKind::TriangleLeftOpen || atom.kind == AtomKind::TriangleOpen;
    const bool right_open = atom.kind == AtomKind::TriangleRightOpen || atom.kind == AtomKind::TriangleOpen;
    const Rational& a = atom.a;
    const Rational& b = segment ? atom.a : atom.b;

    std::int64_t total = 0;
    // Row y lies between the edges x = a(m+1-2y) and x = b(m+1-2y). The row
    // 2y = m+1 is the dilated apex, which is excluded; y = 0 has weight zero.
    for (std::int64_t y = 1; 2 * y < m1; ++y) {
        const Rational s(static_cast<long>(m1 - 2 * y));
        const Rational lo = a * s, hi = b * s;
        Integer first = ceil(lo), last = floor(hi);
        if (left_open && is_integer(lo)) first += 1;
        if (right_open && is_integer(hi)) last -= 1;
        if (last >= first) total += y * to_int64(Integer(last - first + 1));
    }
    return total;
}

}  // namespace

std::vector<WeightedAtom> box_atoms(std::int64_t n) {
    if (n < 1) throw DomainError("box_atoms needs n >= 1");
    const Rational inv_n = make_rational(1, n), inv_n1 = make_rational(1, n + 1);
    return {
        {AtomKind::TriangleOpen, -inv_n, -inv_n1, 2},
        {AtomKind::TriangleOpen, -1, inv_n, 2},
        {AtomKind::TriangleOpen, inv_n1, 1, 2},
        {AtomKind::Segment, inv_n1, inv_n1, 2},
        {AtomKind::Segment, inv_n, inv_n, 2},
        {AtomKind::Segment, 1, 1, 2},
        {AtomKind::Gamma, 0, 0, 1},
    };
}

std::vector<WeightedAtom> delta_atoms(std::int64_t n) {
    if (n < 1) throw DomainError("delta_atoms needs n >= 1");
    const Rational inv_n1 = make_rational(1, n + 1);
    return {
        {AtomKind::TriangleLeftOpen, inv_n1, Rational(static_cast<long>(2 * (n + 1))) - inv_n1, 2},
        {AtomKind::Gamma, 0, 0, n},
    };
}

std::int64_t weighted_count(std::span<const WeightedAtom> atoms, std::int64_t m) {
    if (m < 0) throw DomainError("m must be non-negative");
    std::int64_t total = 0;
    for (const auto& atom : atoms) total += atom.multiplicity * atom_weight(atom, m);
    return total;
}

std::int64_t weighted_count_box(std::int64_t n, std::int64_t m) { return weighted_count(box_atoms(n), m); }

std::int64_t weighted_count_delta(std::int64_t n, std::int64_t m) {
    if (m == 0) return 0;
    return weighted_count(delta_atoms(n), m);
}

}  // namespace anloc::polytopes
