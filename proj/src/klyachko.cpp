#include "anloc/klyachko.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "anloc/errors.hpp"
#include "anloc/exact/rational.hpp"

namespace anloc::klyachko {

std::int64_t lambda(std::int64_t m, std::int64_t i) {
    if (i <= -m) return 0;
    if (i <= 1) return i + m;
    return m + 1;
}

std::int64_t lambda_shifted(std::int64_t m1, std::int64_t i) {
    if (i <= -m1) return 0;
    if (i <= 0) return i + m1;
    return m1;
}

namespace {

void require_distinct_rays(std::span<const RayLevel> levels) {
    std::set<std::int64_t> seen;
    for (const auto& l : levels) {
        if (!seen.insert(l.slope).second) {
            throw DuplicateRayError("ray with slope " + std::to_string(l.slope) + " given twice");
        }
    }
}

using Vec = std::vector<Rational>;

// Row-reduces `rows` in place and returns the nonzero rows.
std::vector<Vec> row_basis(std::vector<Vec> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

// Basis of U ∩ W for subspaces given by bases (rows).
std::vector<Vec> intersect(const std::vector<Vec>& u, const std::vector<Vec>& w) {
    if (u.empty() || w.empty()) return {};
    const std::size_t dim = u.front().size();
    const std::size_t k = u.size(), l = w.size();
    // Columns are u_1..u_k, -w_1..-w_l; a kernel vector (alpha, beta) gives
    // sum alpha_i u_i = sum beta_j w_j in the intersection.
    std::vector<Vec> a(dim, Vec(k + l));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < dim; ++r) a[r][i] = u[i][r];
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t r = 0; r < dim; ++r) a[r][k + j] = -w[j][r];

    // Reduced row echelon form, then read off the kernel.
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < k + l && rank < dim; ++c) {
        std::size_t piv = rank;
        while (piv < dim && a[piv][c] == 0) ++piv;
        if (piv == dim) continue;
        std::swap(a[piv], a[rank]);
        const Rational inv = 1 / a[rank][c];
        for (auto& x : a[rank]) x *= inv;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t cc = 0; cc < k + l; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(k + l, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<Vec> out;
    for (std::size_t free = 0; free < k + l; ++free) {
        if (is_pivot[free]) continue;
        Vec coeff(k + l);
        coeff[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) coeff[pivot_cols[r]] = -a[r][free];
        Vec v(dim);
        for (std::size_t i = 0; i < k; ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t r = 0; r < dim; ++r) v[r] += coeff[i] * u[i][r];
        }
        out.push_back(std::move(v));
    }
    return row_basis(std::move(out));
}

// Basis of the level-j step along the ray through (i, 1) inside the degree-m
// binary forms, coordinates indexed by the exponent of x. The step is
// l^e * S^(m-e) with l = x - i*y the linear form vanishing on the ray.
std::vector<Vec> filtration_step(std::int64_t m, std::int64_t slope, std::int64_t level) {
    const std::size_t dim = static_cast<std::size_t>(m + 1);
    if (level >= 1) return {};
    const std::int64_t e = std::max<std::int64_t>(level + m, 0);
    Vec power(e + 1);  // coefficients of l^e by exponent of x
    for (std::int64_t k = 0; k <= e; ++k) {
        Rational c = binomial(Rational(static_cast<long>(e)), static_cast<unsigned>(k));
        for (std::int64_t r = 0; r < e - k; ++r) c *= -slope;
        power[k] = c;
    }
    std::vector<Vec> basis;
    for (std::int64_t s = 0; s <= m - e; ++s) {
        Vec v(dim);
        for (std::int64_t k = 0; k <= e; ++k) v[k + s] = power[k];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::int64_t filtration_dim(std::int64_t m, std::span<const RayLevel> levels) {
    require_distinct_rays(levels);
    std::int64_t d = m + 1;
    for (const auto& l : levels) d -= lambda(m, l.level);
    return std::max<std::int64_t>(d, 0);
}

std::int64_t filtration_dim_oracle(std::int64_t m, std::span<const RayLevel> levels) {
    require_distinct_rays(levels);
    std::vector<Vec> current;
    for (std::int64_t s = 0; s <= m; ++s) {
        Vec v(m + 1);
        v[s] = 1;
        current.push_back(std::move(v));
    }
    for (const auto& l : levels) {
        current = intersect(current, filtration_step(m, l.slope, l.level));
        if (current.empty()) break;
    }
    return static_cast<std::int64_t>(current.size());
}

std::int64_t delta_pointwise(std::int64_t n, std::int64_t m, const Weight& u, LambdaFn lam) {
    const std::int64_t m1 = m + 1;
    const std::int64_t l0 = lam(m, ray_pairing(0, u));
    const std::int64_t l1 = lam(m, ray_pairing(1, u));
    const std::int64_t ln = lam(m, ray_pairing(n + 1, u));
    auto pos = [](std::int64_t x) { return std::max<std::int64_t>(x, 0); };
    return m1 - l1 - pos(m1 - l0 - l1) - pos(m1 - l1 - ln) + pos(m1 - l0 - ln);
}

Box delta_box(std::int64_t m) { return {-(m + 1), m + 1, -2 * (m + 1), m + 2}; }

std::int64_t delta_total(std::int64_t n, std::int64_t m, LambdaFn lam) {
    const Box box = delta_box(m);
    std::int64_t sum = 0;
    for (std::int64_t u1 = box.lo1; u1 <= box.hi1; ++u1) {
        for (std::int64_t u2 = box.lo2; u2 <= box.hi2; ++u2) {
            const std::int64_t v = delta_pointwise(n, m, {u1, u2}, lam);
            const bool edge = u1 == box.lo1 || u1 == box.hi1 || u2 == box.lo2 || u2 == box.hi2;
            if (edge && v != 0) {
                throw SentinelError("delta_" + std::to_string(n) + "(" + std::to_string(m) + ", (" +
                                    std::to_string(u1) + ", " + std::to_string(u2) + ")) = " +
                                    std::to_string(v) + " on the boundary of the summation box");
            }
            sum += v;
        }
    }
    return sum;
}

std::int64_t z_value(std::int64_t n, std::int64_t m, const ShiftedWeight& p) {
    const std::int64_t m1 = m + 1;
    const std::int64_t quotient =
        std::max<std::int64_t>(0, m1 - lambda_shifted(m1, p.b) - lambda_shifted(m1, (n + 1) * p.a + p.b));
    if (quotient == 0) return 0;
    std::int64_t codim = 0;
    for (std::int64_t i = 1; i <= n && codim < quotient; ++i) codim += lambda_shifted(m1, i * p.a + p.b);
    return std::min(quotient, codim);
}

Box z_box(std::int64_t n, std::int64_t m) { return {-(m + 1), m + 1, -(n + 1) * (m + 1), 0}; }

std::int64_t z_total(std::int64_t n, std::int64_t m) {
    const Box box = z_box(n, m);
    std::int64_t sum = 0;
    for (std::int64_t a = box.lo1; a <= box.hi1; ++a) {
        for (std::int64_t b = box.lo2; b <= box.hi2; ++b) {
            const std::int64_t v = z_value(n, m, {a, b});
            const bool edge = a == box.lo1 || a == box.hi1 || b == box.lo2 || b == box.hi2;
            if (edge && v != 0) {
                throw SentinelError("z_" + std::to_string(m) + "(" + std::to_string(a) + ", " +
                                    std::to_string(b) + ") = " + std::to_string(v) +
                                    " on the boundary of the enumeration box for n = " + std::to_string(n));
            }
            sum += v;
        }
    }
    return sum;
}

}  // namespace anloc::klyachko
