#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "anloc/exact/polynomial.hpp"
#include "anloc/exact/rational_function.hpp"

namespace anloc {

// Q(t) = rows[t mod period](t), each row a polynomial of degree <= degree()
// given by its coefficients from the constant term up. The period is kept as
// supplied and is not reduced to the minimal one.
class QuasiPolynomial {
public:
    QuasiPolynomial(std::int64_t period, int degree, std::vector<std::vector<Rational>> rows);

    static QuasiPolynomial constant(const Rational& c);

    std::int64_t period() const { return period_; }
    int degree() const { return degree_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<Rational>& row(std::int64_t residue) const { return rows_.at(residue); }

    Rational operator()(std::int64_t t) const;

    // Coefficient of t^k in every row (empty rows count as zero).
    std::vector<Rational> coefficient(int k) const;

    // Same function with period a multiple of the current one.
    QuasiPolynomial with_period(std::int64_t period) const;
    // t |-> Q(t + s)
    QuasiPolynomial shifted(std::int64_t s) const;

    friend QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b);
    friend QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b);
    friend QuasiPolynomial operator*(const Rational& c, const QuasiPolynomial& a);
    friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
        return a.period_ == b.period_ && a.degree_ == b.degree_ && a.rows_ == b.rows_;
    }

private:
    std::int64_t period_;
    int degree_;
    std::vector<std::vector<Rational>> rows_;
};

using Sampler = std::function<Rational(std::int64_t)>;

// Fits each residue class r through degree+1 samples taken at the smallest
// arguments r + k*period that are >= first_argument, then checks two more
// samples per class. Throws VerificationError naming the residue and the
// argument on mismatch.
QuasiPolynomial qpoly_interpolate(std::int64_t period, int degree, const Sampler& sampler,
                                  std::int64_t first_argument = 0);

inline Rational qpoly_eval(const QuasiPolynomial& q, std::int64_t t) { return q(t); }

// shift 0: sum_m Q(m) t^m; shift 1: sum_m Q(m+1) t^m. The result has
// denominator (1 - t^p)^(d+1) and is checked against 3(d+1)p further
// coefficients (VerificationError on mismatch).
RationalFunction qpoly_to_genfun(const QuasiPolynomial& q, int shift);

}  // namespace anloc
