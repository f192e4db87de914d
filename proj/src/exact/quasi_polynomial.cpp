#include "anloc/exact/quasi_polynomial.hpp"

#include <numeric>
#include <string>

#include "anloc/errors.hpp"

namespace anloc {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

Rational eval_row(const std::vector<Rational>& row, const Rational& t) {
    Rational acc = 0;
    for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * t + *it;
    return acc;
}

// Coefficients of the unique polynomial of degree < xs.size() through (xs, ys).
std::vector<Rational> fit(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Rational p = 1;
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = p;
            p *= xs[i];
        }
        a[i][n] = ys[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n] / a[i][i];
    return out;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(std::int64_t period, int degree, std::vector<std::vector<Rational>> rows)
    : period_(period), degree_(degree), rows_(std::move(rows)) {
    if (period_ < 1) throw DomainError("quasi-polynomial period must be positive");
    if (degree_ < 0) throw DomainError("quasi-polynomial degree must be non-negative");
    if (static_cast<std::int64_t>(rows_.size()) != period_) {
        throw DomainError("quasi-polynomial needs one row per residue class");
    }
    for (auto& r : rows_) {
        if (static_cast<int>(r.size()) > degree_ + 1) {
            throw DomainError("quasi-polynomial row longer than degree + 1");
        }
        r.resize(degree_ + 1);
    }
}

QuasiPolynomial QuasiPolynomial::constant(const Rational& c) { return {1, 0, {{c}}}; }

Rational QuasiPolynomial::operator()(std::int64_t t) const {
    return eval_row(rows_[mod(t, period_)], Rational(static_cast<long>(t)));
}

std::vector<Rational> QuasiPolynomial::coefficient(int k) const {
    std::vector<Rational> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(k <= degree_ ? r[k] : Rational(0));
    return out;
}

QuasiPolynomial QuasiPolynomial::with_period(std::int64_t period) const {
    if (period < 1 || period % period_ != 0) {
        throw DomainError("new period " + std::to_string(period) + " is not a multiple of " +
                          std::to_string(period_));
    }
    std::vector<std::vector<Rational>> rows(period);
    for (std::int64_t r = 0; r < period; ++r) rows[r] = rows_[r % period_];
    return {period, degree_, std::move(rows)};
}

QuasiPolynomial QuasiPolynomial::shifted(std::int64_t s) const {
    // Row r of the result is the row of r+s, re-expanded around t+s.
    std::vector<std::vector<Rational>> rows(period_);
    for (std::int64_t r = 0; r < period_; ++r) {
        const auto& src = rows_[mod(r + s, period_)];
        Polynomial acc;
        const Polynomial lin(std::vector<Rational>{Rational(static_cast<long>(s)), Rational(1)});
        Polynomial power = Polynomial::constant(1);
        for (const auto& c : src) {
            acc += power * c;
            power *= lin;
        }
        rows[r] = acc.coeffs();
    }
    return {period_, degree_, std::move(rows)};
}

QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    const std::int64_t p = std::lcm(a.period_, b.period_);
    const int d = std::max(a.degree_, b.degree_);
    std::vector<std::vector<Rational>> rows(p, std::vector<Rational>(d + 1));
    for (std::int64_t r = 0; r < p; ++r) {
        const auto& ra = a.rows_[r % a.period_];
        const auto& rb = b.rows_[r % b.period_];
        for (std::size_t k = 0; k < ra.size(); ++k) rows[r][k] += ra[k];
        for (std::size_t k = 0; k < rb.size(); ++k) rows[r][k] += rb[k];
    }
    return {p, d, std::move(rows)};
}

QuasiPolynomial operator*(const Rational& c, const QuasiPolynomial& a) {
    auto rows = a.rows_;
    for (auto& r : rows) {
        for (auto& x : r) x *= c;
    }
    return {a.period_, a.degree_, std::move(rows)};
}

QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b) { return a + Rational(-1) * b; }

QuasiPolynomial qpoly_interpolate(std::int64_t period, int degree, const Sampler& sampler,
                                  std::int64_t first_argument) {
    if (period < 1) throw DomainError("interpolation period must be positive");
    if (degree < 0) throw DomainError("interpolation degree must be non-negative");
    constexpr int kExtraSamples = 2;
    std::vector<std::vector<Rational>> rows(period);
    for (std::int64_t r = 0; r < period; ++r) {
        std::int64_t start = r;
        if (start < first_argument) start += ((first_argument - start + period - 1) / period) * period;
        std::vector<Rational> xs, ys;
        for (int k = 0; k <= degree; ++k) {
            const std::int64_t t = start + k * period;
            xs.emplace_back(static_cast<long>(t));
            ys.push_back(sampler(t));
        }
        rows[r] = fit(xs, ys);
        for (int k = degree + 1; k <= degree + kExtraSamples; ++k) {
            const std::int64_t t = start + k * period;
            const Rational expected = sampler(t);
            const Rational got = eval_row(rows[r], Rational(static_cast<long>(t)));
            if (expected != got) {
                throw VerificationError("quasi-polynomial fit for residue " + std::to_string(r) + " mod " +
                                        std::to_string(period) + " predicts " + to_string(got) +
                                        " at argument " + std::to_string(t) + " but the sample is " +
                                        to_string(expected));
            }
        }
    }
    return {period, degree, std::move(rows)};
}

RationalFunction qpoly_to_genfun(const QuasiPolynomial& q, int shift) {
    if (shift != 0 && shift != 1) throw DomainError("genfun shift must be 0 or 1");
    const std::int64_t p = q.period();
    const int d = q.degree();
    const std::size_t head = static_cast<std::size_t>((d + 1) * p);
    const std::size_t extra = 3 * head;

    std::vector<Rational> values(head + extra);
    for (std::size_t m = 0; m < values.size(); ++m) values[m] = q(static_cast<std::int64_t>(m) + shift);

    // (1 - t^p)^(d+1)
    Polynomial den = (Polynomial::constant(1) - Polynomial::monomial(1, p)).pow(d + 1);
    Polynomial series_head(std::vector<Rational>(values.begin(), values.begin() + head));
    Polynomial full = series_head * den;
    std::vector<Rational> trimmed(head);
    for (std::size_t k = 0; k < head; ++k) trimmed[k] = full[k];
    RationalFunction out(Polynomial(std::move(trimmed)), std::move(den));

    const auto check = series_coefficients(out, values.size());
    for (std::size_t m = 0; m < values.size(); ++m) {
        if (check[m] != values[m]) {
            throw VerificationError("generating function coefficient " + std::to_string(m) + " is " +
                                    to_string(check[m]) + " but the quasi-polynomial gives " +
                                    to_string(values[m]));
        }
    }
    return out;
}

}  // namespace anloc
