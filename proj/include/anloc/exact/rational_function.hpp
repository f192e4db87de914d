#pragma once

#include <string>
#include <vector>

#include "anloc/exact/polynomial.hpp"

namespace anloc {

// num/den with den not identically zero. No reduction is attempted; equality
// is decided by cross multiplication.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial{1}) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const Rational& c, const RationalFunction& a);

    std::string to_string(char var = 't') const;

private:
    Polynomial num_;
    Polynomial den_;
};

// Coefficients c_0..c_{count-1} of the power series of f at 0.
// Throws PoleAtOriginError if den(0) = 0.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t count);

// f.num * g.den == g.num * f.den
bool ratfun_equal(const RationalFunction& f, const RationalFunction& g);

}  // namespace anloc
