#include "anloc/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace anloc {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(make_rational(c));
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::geometric(std::size_t terms, std::size_t step) {
    if (terms == 0) return {};
    std::vector<Rational> v((terms - 1) * step + 1);
    for (std::size_t i = 0; i < terms; ++i) v[i * step] = 1;
    return Polynomial(std::move(v));
}

Rational Polynomial::operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = constant(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) out *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || k == 0) os << anloc::to_string(mag);
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace anloc
