#pragma once

#include <string>
#include <utility>

#include "hypercong/errors.hpp"
#include "hypercong/rational.hpp"

namespace hypercong {

/// Deterministic primality by trial division. Adequate at desk scale.
inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// A prime p >= 5 together with a precision exponent k >= 1; fixes the
/// modulus p^k for all residue arithmetic performed under it.
class PadicContext {
public:
    PadicContext(unsigned long prime, unsigned precision)
        : p_(prime), k_(precision) {
        if (k_ < 1) {
            throw precondition_error("PadicContext: precision must be >= 1");
        }
        if (p_ < 5 || !is_prime(p_)) {
            throw precondition_error(
                "PadicContext: modulus base must be a prime >= 5, got " +
                std::to_string(p_));
        }
        mpz_ui_pow_ui(modulus_.get_mpz_t(), p_, k_);
    }

    unsigned long prime() const { return p_; }
    unsigned precision() const { return k_; }
    const BigInt& modulus() const { return modulus_; }

    bool operator==(const PadicContext& other) const {
        return p_ == other.p_ && k_ == other.k_;
    }
    bool operator!=(const PadicContext& other) const { return !(*this == other); }

private:
    unsigned long p_;
    unsigned k_;
    BigInt modulus_;
};

/// Canonical least non-negative representative of a residue class mod p^k.
/// Residues remember their context; mixing contexts is a hard error.
class Residue {
public:
    Residue(BigInt value, PadicContext ctx)
        : value_(std::move(value)), ctx_(std::move(ctx)) {
        mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(),
                   ctx_.modulus().get_mpz_t());
    }

    const BigInt& value() const { return value_; }
    const PadicContext& context() const { return ctx_; }
    bool is_zero() const { return sgn(value_) == 0; }
    std::string str() const { return value_.get_str(); }

    Residue operator+(const Residue& o) const {
        require_same(o);
        return Residue(value_ + o.value_, ctx_);
    }
    Residue operator-(const Residue& o) const {
        require_same(o);
        return Residue(value_ - o.value_, ctx_);
    }
    Residue operator*(const Residue& o) const {
        require_same(o);
        return Residue(value_ * o.value_, ctx_);
    }
    Residue operator-() const { return Residue(-value_, ctx_); }

    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    bool operator==(const Residue& o) const {
        require_same(o);
        return value_ == o.value_;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }

    Residue pow(unsigned long e) const {
        BigInt r;
        BigInt base = value_;
        mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e,
                    ctx_.modulus().get_mpz_t());
        return Residue(r, ctx_);
    }

    Residue inverse() const;

private:
    void require_same(const Residue& o) const {
        if (ctx_ != o.ctx_) {
            throw context_mismatch_error(
                "Residue: operands from different p-adic contexts");
        }
    }

    BigInt value_;
    PadicContext ctx_;
};

/// Inverse of x mod p^k. Throws not_invertible_error when p | x.
inline Residue mod_inverse(const BigInt& x, const PadicContext& ctx) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(),
                   ctx.modulus().get_mpz_t()) == 0) {
        throw not_invertible_error("mod_inverse: " + x.get_str() +
                                   " is divisible by " +
                                   std::to_string(ctx.prime()));
    }
    return Residue(r, ctx);
}

inline Residue Residue::inverse() const { return mod_inverse(value_, ctx_); }

inline Residue reduce_integer(const BigInt& x, const PadicContext& ctx) {
    return Residue(x, ctx);
}

/// Canonical residue of a rational whose denominator is a p-adic unit.
inline Residue reduce_rational(const BigRational& q, const PadicContext& ctx) {
    const BigInt den = denominator(q);
    if (mpz_divisible_ui_p(den.get_mpz_t(), ctx.prime())) {
        throw denominator_divisible_error(
            "reduce_rational: denominator of " + q.get_str() +
            " is divisible by " + std::to_string(ctx.prime()));
    }
    return Residue(numerator(q), ctx) * mod_inverse(den, ctx);
}

} // namespace hypercong
