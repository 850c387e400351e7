#pragma once

#include <string>
#include <utility>

#include "hypercong/errors.hpp"
#include "hypercong/rational.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

/// Least non-negative residue of a modulo p, for a with p-coprime denominator.
inline unsigned long least_residue(const BigRational& a, unsigned long p) {
    const Residue r = reduce_rational(a, PadicContext(p, 1));
    return mpz_get_ui(r.value().get_mpz_t());
}

/// A p-adic integer parameter a bundled with its context, least residue
/// and the derived quantities the congruence checkers need.
class PadicParameter {
public:
    PadicParameter(BigRational a, PadicContext ctx)
        : a_(std::move(a)),
          ctx_(std::move(ctx)),
          residue_class_(least_residue(a_, ctx_.prime())) {}

    const BigRational& value() const { return a_; }
    const PadicContext& context() const { return ctx_; }

    /// The least non-negative integer congruent to a mod p.
    unsigned long residue_class() const { return residue_class_; }
    bool is_even() const { return residue_class_ % 2 == 0; }
    bool is_odd() const { return !is_even(); }

    /// (a - residue_class)/p; again a p-adic integer.
    BigRational delta() const {
        return (a_ - BigInt(residue_class_)) / BigInt(ctx_.prime());
    }

    /// p - residue_class, the reflected residue used when a is replaced
    /// by a negative representative.
    unsigned long complement() const { return ctx_.prime() - residue_class_; }

private:
    BigRational a_;
    PadicContext ctx_;
    unsigned long residue_class_;
};

/// Fermat quotient (a^(p-1) - 1)/p of a rational coprime to p, as a
/// residue mod p. Computed exactly over the rationals, then reduced.
inline Residue fermat_quotient(const BigRational& a, unsigned long p) {
    const BigInt num = numerator(a);
    const BigInt den = denominator(a);
    if (mpz_divisible_ui_p(num.get_mpz_t(), p) ||
        mpz_divisible_ui_p(den.get_mpz_t(), p)) {
        throw not_coprime_error("fermat_quotient: " + a.get_str() +
                                " shares a factor with " + std::to_string(p));
    }
    const BigRational q =
        (pow_rational(a, static_cast<long>(p) - 1) - 1) / BigInt(p);
    return reduce_rational(q, PadicContext(p, 1));
}

/// Harmonic number H_n reduced mod p^k by modular summation of inverses.
/// Errors when some summand 1/i has p | i; no silent skipping.
inline Residue harmonic_mod(unsigned long n, const PadicContext& ctx) {
    Residue acc(0, ctx);
    for (unsigned long i = 1; i <= n; ++i) {
        if (i % ctx.prime() == 0) {
            throw denominator_divisible_error(
                "harmonic_mod: summand 1/" + std::to_string(i) +
                " is not invertible mod " + std::to_string(ctx.prime()));
        }
        acc += mod_inverse(BigInt(i), ctx);
    }
    return acc;
}

/// Morita p-adic Gamma function evaluated mod p^k: lift x to the unique
/// integer m in [0, p^k) and take (-1)^m times the product of the
/// p-coprime integers below m. Cost O(p^k).
inline Residue gamma_p(const BigRational& x, const PadicContext& ctx) {
    const Residue lift = reduce_rational(x, ctx);
    const BigInt& m = lift.value();
    BigInt acc = 1;
    for (BigInt j = 1; j < m; ++j) {
        if (mpz_divisible_ui_p(j.get_mpz_t(), ctx.prime())) continue;
        acc *= j;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), ctx.modulus().get_mpz_t());
    }
    if (mpz_odd_p(m.get_mpz_t())) acc = -acc;
    return Residue(acc, ctx);
}

/// True for the four special parameters -1/2, -1/3, -1/4, -1/6.
inline bool is_special4(const BigRational& a) {
    if (numerator(a) != -1) return false;
    const BigInt d = denominator(a);
    return d == 2 || d == 3 || d == 4 || d == 6;
}

/// floor(-p*a) = floor(p/d) for a = -1/d in the special four-element set.
inline unsigned long floor_neg_pa(const BigRational& a, unsigned long p) {
    if (!is_special4(a)) {
        throw precondition_error(
            "floor_neg_pa: parameter must be one of -1/2, -1/3, -1/4, -1/6");
    }
    return p / mpz_get_ui(denominator(a).get_mpz_t());
}

} // namespace hypercong
