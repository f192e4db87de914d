#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "anloc/exact/rational.hpp"

namespace anloc {

// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of t^k.
// The highest stored coefficient is nonzero; the zero polynomial stores none.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<std::int64_t> coeffs);

    static Polynomial constant(const Rational& c);
    // c * t^k
    static Polynomial monomial(const Rational& c, std::size_t k);
    // 1 + t^step + t^(2 step) + ... with `terms` summands
    static Polynomial geometric(std::size_t terms, std::size_t step = 1);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Coefficient of t^k, zero beyond the degree.
    Rational operator[](std::size_t k) const;

    Rational eval(const Rational& t) const;
    Polynomial pow(unsigned e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace anloc
