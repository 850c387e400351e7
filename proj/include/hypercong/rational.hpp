#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "hypercong/errors.hpp"

namespace hypercong {

// GMP supplies the arbitrary-precision integer and rational representations.
// BigRational values are kept canonical: lowest terms, positive denominator.
// Every arithmetic operation below is exact.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt numerator(const BigRational& q) { return q.get_num(); }
inline BigInt denominator(const BigRational& q) { return q.get_den(); }

/// num/den in canonical form. Throws on a zero denominator.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) {
        throw precondition_error("make_rational: zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n" or "n/d" (base 10, optional leading minus).
inline BigRational parse_rational(const std::string& text) {
    BigRational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
        throw precondition_error("parse_rational: cannot parse '" + text + "'");
    }
    if (sgn(BigInt(q.get_den())) == 0) {
        throw precondition_error("parse_rational: zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Integer binomial coefficient; the top may be negative.
inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Generalized binomial coefficient x(x-1)...(x-m+1)/m! over the rationals.
/// Negative m is rejected rather than defined to be zero.
inline BigRational rational_binomial(const BigRational& x, long m) {
    if (m < 0) {
        throw precondition_error("rational_binomial: negative lower index");
    }
    BigRational num = 1;
    for (long i = 0; i < m; ++i) {
        num *= x - BigInt(i);
    }
    return num / BigRational(factorial(static_cast<unsigned long>(m)));
}

/// n-th harmonic number, exact; harmonic_exact(0) = 0.
inline BigRational harmonic_exact(unsigned long n) {
    BigRational acc = 0;
    for (unsigned long i = 1; i <= n; ++i) {
        acc += BigRational(1, i);
    }
    return acc;
}

/// base^e for integer e (negative exponents invert; base must be nonzero then).
inline BigRational pow_rational(const BigRational& base, long e) {
    if (e == 0) {
        return BigRational(1);
    }
    if (e < 0 && sgn(base) == 0) {
        throw precondition_error("pow_rational: negative power of zero");
    }
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), mag);
    return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

/// x^e for non-negative integer exponents.
inline BigInt pow_integer(const BigInt& x, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

} // namespace hypercong
