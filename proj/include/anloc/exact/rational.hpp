#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace anloc {

using Integer = mpz_class;

// GMP rationals. Every arithmetic result is canonical; values built from a
// raw numerator/denominator pair must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Parses "p", "-p", "p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

// Throws DomainError when r is not an integer or does not fit.
std::int64_t to_int64(const Rational& r);
std::int64_t to_int64(const Integer& z);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0,
// as the polynomial n(n-1)...(n-k+1)/k!.
Rational binomial(const Rational& n, unsigned k);

}  // namespace anloc
