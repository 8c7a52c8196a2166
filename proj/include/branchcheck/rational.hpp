#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace branchcheck {

using Integer = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long constructors; long is 64-bit on every platform we
// build for.
static_assert(sizeof(long) == sizeof(long long));

inline Integer to_integer(long long value) { return Integer(static_cast<long>(value)); }

// gcd(0,0) = 0; the result is always nonnegative.
inline Integer integer_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer integer_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Canonical rational with positive denominator; throws on zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational pow_rational(const Rational& base, unsigned long exp) {
    if (exp == 0) return Rational(1);
    return make_rational(integer_pow(base.get_num(), exp), integer_pow(base.get_den(), exp));
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "a" or "a/b" with an optional leading '-'; b must be positive.
Rational rational_from_string(const std::string& text);

}  // namespace branchcheck
