#include "anloc/exact/rational_function.hpp"

#include <utility>

#include "anloc/errors.hpp"

namespace anloc {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator*(const Rational& c, const RationalFunction& a) { return {a.num_ * c, a.den_}; }

std::string RationalFunction::to_string(char var) const {
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t count) {
    const auto& den = f.den().coeffs();
    if (den.empty() || den[0] == 0) {
        throw PoleAtOriginError("series expansion requested but the denominator vanishes at 0: " +
                                f.to_string());
    }
    // Sparse view of den(1..) keeps the recurrence cheap for (1 - t^p)^k.
    std::vector<std::pair<std::size_t, Rational>> tail;
    for (std::size_t j = 1; j < den.size(); ++j) {
        if (den[j] != 0) tail.emplace_back(j, den[j]);
    }
    const Rational inv0 = 1 / den[0];
    std::vector<Rational> c(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rational acc = f.num()[k];
        for (const auto& [j, d] : tail) {
            if (j > k) break;
            acc -= d * c[k - j];
        }
        c[k] = acc * inv0;
    }
    return c;
}

bool ratfun_equal(const RationalFunction& f, const RationalFunction& g) {
    return f.num() * g.den() == g.num() * f.den();
}

}  // namespace anloc
