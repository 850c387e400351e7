#pragma once

#include <vector>

#include "hypercong/errors.hpp"
#include "hypercong/rational.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

/// Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.
inline BigRational pochhammer(const BigRational& a, unsigned long k) {
    BigRational acc = 1;
    for (unsigned long i = 0; i < k; ++i) {
        acc *= a + BigInt(i);
    }
    return acc;
}

/// A truncated hypergeometric series: upper and lower parameter lists,
/// argument z, and the number of terms N (the sum runs over 0 <= k < N).
/// Lower parameters that would put a zero factor inside the truncation
/// range are rejected at construction.
struct HypergeomSpec {
    std::vector<BigRational> upper;
    std::vector<BigRational> lower;
    BigRational z;
    unsigned long truncation;

    HypergeomSpec(std::vector<BigRational> upper_params,
                  std::vector<BigRational> lower_params, BigRational argument,
                  unsigned long n_terms)
        : upper(std::move(upper_params)),
          lower(std::move(lower_params)),
          z(std::move(argument)),
          truncation(n_terms) {
        for (const BigRational& b : lower) {
            if (denominator(b) != 1 || sgn(b) > 0) continue;
            BigInt mag = -numerator(b);
            if (mag < BigInt(truncation)) {
                throw precondition_error(
                    "HypergeomSpec: lower parameter " + b.get_str() +
                    " is zero or a negative integer inside the truncation range");
            }
        }
    }

    /// Exact value of the truncated sum.
    BigRational evaluate() const {
        BigRational sum = 0;
        BigRational term = 1;
        for (unsigned long k = 0; k < truncation; ++k) {
            if (k > 0) {
                const BigInt idx(k - 1);
                for (const BigRational& a : upper) term *= a + idx;
                for (const BigRational& b : lower) term /= b + idx;
                term *= z;
                term /= BigInt(k);
            }
            sum += term;
        }
        return sum;
    }
};

/// Exact truncated 3F2 with upper parameters 1/2, -a, a+1, lower
/// parameters 1, 1 and unit argument, summed over 0 <= k < n_terms.
inline BigRational truncated_3f2(const BigRational& a, unsigned long n_terms) {
    BigRational sum = 0;
    BigRational term = 1;
    for (unsigned long k = 0; k < n_terms; ++k) {
        if (k > 0) {
            const BigInt j(k - 1);
            term *= make_rational(2 * j + 1, 2u);
            term *= j - a;
            term *= a + 1 + j;
            term /= pow_integer(BigInt(k), 3);
        }
        sum += term;
    }
    return sum;
}

/// The k-th summand of the same 3F2 in binomial form:
/// C(2k,k)^2 C(a+k,2k) (-1/4)^k.
inline BigRational term_binomial_form(const BigRational& a, unsigned long k) {
    const BigRational central(binomial(2 * k, k));
    return central * central * rational_binomial(a + BigInt(k), 2 * k) *
           pow_rational(make_rational(-1, 4u), static_cast<long>(k));
}

/// One summand in both of its equal shapes.
struct HyperTerm {
    unsigned long k;
    BigRational pochhammer_form;
    BigRational binomial_form;
};

inline HyperTerm hyper_term(const BigRational& a, unsigned long k) {
    const BigRational poch = pochhammer(make_rational(1, 2u), k) *
                             pochhammer(-a, k) * pochhammer(a + 1, k) /
                             pow_rational(BigRational(factorial(k)), 3);
    return HyperTerm{k, poch, term_binomial_form(a, k)};
}

/// Streams the 3F2 summands t_k as residues mod p^k without ever
/// materializing the exact rationals. Each term is carried as
/// p^val * unit with the exact p-adic valuation tracked separately, so
/// the residue stays correct across the index ranges where numerator and
/// denominator factors pick up powers of p. Terms are p-adic integers
/// whenever the parameter a is, which the constructor enforces.
class Mod3F2TermStream {
public:
    Mod3F2TermStream(const BigRational& a, const PadicContext& ctx)
        : ctx_(ctx),
          a_num_(numerator(a)),
          a_den_(denominator(a)),
          unit_(1),
          val_(0),
          zero_(false),
          k_(0) {
        if (mpz_divisible_ui_p(a_den_.get_mpz_t(), ctx_.prime())) {
            throw denominator_divisible_error(
                "Mod3F2TermStream: denominator of " + a.get_str() +
                " is divisible by " + std::to_string(ctx_.prime()));
        }
    }

    unsigned long index() const { return k_; }

    /// Residue of the current term t_k.
    Residue current() const {
        if (zero_ || val_ >= static_cast<long>(ctx_.precision())) {
            return Residue(0, ctx_);
        }
        if (val_ < 0) {
            throw error("Mod3F2TermStream: term with negative p-adic valuation");
        }
        BigInt scaled;
        mpz_ui_pow_ui(scaled.get_mpz_t(), ctx_.prime(),
                      static_cast<unsigned long>(val_));
        return Residue(scaled * unit_, ctx_);
    }

    /// Advance from t_k to t_{k+1} via the term ratio
    /// (1/2+k)(-a+k)(a+1+k) / (k+1)^3.
    void advance() {
        const BigInt j(k_);
        mul_integer(2 * j + 1);                    // 1/2 + k = (2k+1)/2
        mul_integer(j * a_den_ - a_num_);          // -a + k
        mul_integer(a_num_ + (j + 1) * a_den_);    // a + 1 + k
        div_integer(2 * a_den_ * a_den_ * pow_integer(j + 1, 3));
        ++k_;
    }

private:
    void mul_integer(BigInt z) {
        if (zero_) return;
        if (sgn(z) == 0) {
            zero_ = true;
            return;
        }
        val_ += strip_p(z);
        unit_ *= z;
        mpz_fdiv_r(unit_.get_mpz_t(), unit_.get_mpz_t(),
                   ctx_.modulus().get_mpz_t());
    }

    void div_integer(BigInt z) {
        if (zero_) return;
        val_ -= strip_p(z);
        unit_ *= mod_inverse(z, ctx_).value();
        mpz_fdiv_r(unit_.get_mpz_t(), unit_.get_mpz_t(),
                   ctx_.modulus().get_mpz_t());
    }

    long strip_p(BigInt& z) const {
        return static_cast<long>(
            mpz_remove(z.get_mpz_t(), z.get_mpz_t(),
                       BigInt(ctx_.prime()).get_mpz_t()));
    }

    PadicContext ctx_;
    BigInt a_num_;
    BigInt a_den_;
    BigInt unit_;
    long val_;
    bool zero_;
    unsigned long k_;
};

/// Sum of the 3F2 terms over k in [begin, end), mod p^k.
inline Residue sum_3f2_mod(const BigRational& a, unsigned long begin,
                           unsigned long end, const PadicContext& ctx) {
    Mod3F2TermStream stream(a, ctx);
    Residue sum(0, ctx);
    for (unsigned long k = 0; k < end; ++k, stream.advance()) {
        if (k >= begin) sum += stream.current();
    }
    return sum;
}

/// Truncated 3F2 mod p^k; agrees with reduce_rational(truncated_3f2(a, N))
/// whenever the exact path is feasible.
inline Residue truncated_3f2_mod(const BigRational& a, unsigned long n_terms,
                                 const PadicContext& ctx) {
    return sum_3f2_mod(a, 0, n_terms, ctx);
}

/// Block sum over one residue window k in [rp, (r+1)p).
inline Residue block_sum_3f2_mod(const BigRational& a, unsigned long r,
                                 const PadicContext& ctx) {
    const unsigned long p = ctx.prime();
    return sum_3f2_mod(a, r * p, (r + 1) * p, ctx);
}

} // namespace hypercong
