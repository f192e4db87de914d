#include "anloc/exact/rational.hpp"

#include <limits>

#include "anloc/errors.hpp"

namespace anloc {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw DomainError("empty integer in rational '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw DomainError("malformed rational '" + std::string(text) + "'");
            }
        }
        std::string owned(s[0] == '+' ? s.substr(1) : s);
        return Integer(owned, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw DomainError("integer " + z.get_str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& r) {
    if (!is_integer(r)) throw DomainError("expected an integer, got " + to_string(r));
    return to_int64(r.get_num());
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Rational binomial(const Rational& n, unsigned k) {
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

}  // namespace anloc
