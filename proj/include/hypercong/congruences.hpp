#pragma once

#include <string>
#include <vector>

#include "hypercong/errors.hpp"
#include "hypercong/hyperseries.hpp"
#include "hypercong/identities.hpp"
#include "hypercong/padic.hpp"
#include "hypercong/rational.hpp"
#include "hypercong/record.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

namespace detail {

/// C(2k,k)^2 (-1/4)^k, advanced one index at a time.
class CentralSquareBase {
public:
    const BigRational& value() const { return value_; }
    void advance() {
        ++k_;
        const BigInt j(k_);
        value_ *= make_rational(-(2 * j - 1) * (2 * j - 1), j * j);
    }

private:
    BigRational value_ = 1;
    unsigned long k_ = 0;
};

/// Exact sum_{k=0}^{kmax} C(2k,k)^2 C(top(k), 2k) (-1/4)^k weight(k).
/// When the binomial factor vanishes (integer top below 2k) every later
/// term vanishes too, so the loop stops before the weight state would be
/// advanced past that point; several weights have factors 1/0 exactly
/// there, which the vanishing binomial suppresses.
template <typename TopFn, typename WeightFn>
BigRational binomial_weighted_sum(unsigned long kmax, TopFn&& top,
                                  WeightFn&& weight) {
    BigRational sum = 0;
    CentralSquareBase base;
    for (unsigned long k = 0; k <= kmax; ++k) {
        if (k > 0) base.advance();
        const BigRational binpart =
            base.value() * rational_binomial(top(k), static_cast<long>(2 * k));
        if (sgn(binpart) == 0) break;
        sum += binpart * weight(k);
    }
    return sum;
}

inline BigRational one_weight(unsigned long) { return BigRational(1); }

inline std::string parity_note(unsigned long residue_class, bool need_even) {
    return "residue-class parity " +
           std::string(residue_class % 2 == 0 ? "even" : "odd") +
           ", check requires " + (need_even ? "even" : "odd") +
           " (residue class " + std::to_string(residue_class) + ")";
}

inline std::string special4_note(const BigRational& a) {
    return "a = " + a.get_str() + " not in {-1/2, -1/3, -1/4, -1/6}";
}

inline std::string integer_parameter_note(const BigRational& a) {
    return "integer parameter a = " + a.get_str() +
           ": the inverse weights degenerate where the binomial factor "
           "vanishes, so the displayed sums are not defined";
}

inline std::string low_residue_note(unsigned long ra, unsigned long p) {
    return "residue class " + std::to_string(ra) + " below (p-1)/2 = " +
           std::to_string((p - 1) / 2) +
           ": the half-range rewrite drops terms that do not vanish at "
           "this modulus";
}

inline bool denominator_ok(const BigRational& a, unsigned long p) {
    return !mpz_divisible_ui_p(denominator(a).get_mpz_t(), p);
}

inline std::string denominator_note(const BigRational& a, unsigned long p) {
    return "denominator of a = " + a.get_str() + " divisible by p = " +
           std::to_string(p);
}

} // namespace detail

/// (nx): C(2rp+2k, rp+k) = C(2r,r) C(2k,k) (1 + 2rp(H_2k - H_k)) mod p^2,
/// exact binomial on the left, modular arithmetic on the right.
inline CheckRecord check_nx(unsigned long p, long r, long k,
                            bool perturb = false) {
    CheckRecord rec{.id = "nx", .paper_label = "(nx)", .p = p, .r = r, .k = k};
    if (r < 0 || k < 0 || 2 * k > static_cast<long>(p) - 1) {
        throw precondition_error("check_nx: need r >= 0 and 0 <= k <= (p-1)/2");
    }
    const PadicContext ctx(p, 2);
    const unsigned long ku = static_cast<unsigned long>(k);
    const unsigned long ru = static_cast<unsigned long>(r);
    const Residue lhs =
        reduce_integer(binomial(2 * ru * p + 2 * ku, ru * p + ku), ctx);
    const Residue hdiff = harmonic_mod(2 * ku, ctx) - harmonic_mod(ku, ctx);
    const Residue rhs = reduce_integer(binomial(2 * ru, ru), ctx) *
                        reduce_integer(binomial(2 * ku, ku), ctx) *
                        (Residue(1, ctx) + Residue(BigInt(2 * ru * p), ctx) * hdiff);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// (nb-12): the squared form of (nx), correction term 4rp(H_2k - H_k).
inline CheckRecord check_nb12(unsigned long p, long r, long k,
                              bool perturb = false) {
    CheckRecord rec{
        .id = "nb12", .paper_label = "(nb-12)", .p = p, .r = r, .k = k};
    if (r < 0 || k < 0 || 2 * k > static_cast<long>(p) - 1) {
        throw precondition_error(
            "check_nb12: need r >= 0 and 0 <= k <= (p-1)/2");
    }
    const PadicContext ctx(p, 2);
    const unsigned long ku = static_cast<unsigned long>(k);
    const unsigned long ru = static_cast<unsigned long>(r);
    const Residue big =
        reduce_integer(binomial(2 * ru * p + 2 * ku, ru * p + ku), ctx);
    const Residue lhs = big * big;
    const Residue small2r = reduce_integer(binomial(2 * ru, ru), ctx);
    const Residue small2k = reduce_integer(binomial(2 * ku, ku), ctx);
    const Residue hdiff = harmonic_mod(2 * ku, ctx) - harmonic_mod(ku, ctx);
    const Residue rhs =
        small2r * small2r * small2k * small2k *
        (Residue(1, ctx) + Residue(BigInt(4 * ru * p), ctx) * hdiff);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// (nc-10): (1/4)^(k+rp) = (1/4)^(k+r) (1 + rp H_floor(p/2)) mod p^2.
inline CheckRecord check_nc10(unsigned long p, long r, long k,
                              bool perturb = false) {
    CheckRecord rec{
        .id = "nc10", .paper_label = "(nc-10)", .p = p, .r = r, .k = k};
    if (r < 0 || k < 0) {
        throw precondition_error("check_nc10: need r >= 0 and k >= 0");
    }
    const PadicContext ctx(p, 2);
    const BigRational quarter = make_rational(1, 4u);
    const unsigned long ru = static_cast<unsigned long>(r);
    const Residue lhs =
        reduce_rational(pow_rational(quarter, k + static_cast<long>(ru * p)), ctx);
    const Residue rhs =
        reduce_rational(pow_rational(quarter, k + r), ctx) *
        (Residue(1, ctx) +
         Residue(BigInt(ru * p), ctx) * harmonic_mod(p / 2, ctx));
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// (nc-11): (1/4)^(k+rp) C(2k+2rp, k+rp) =
/// (1/4)^(k+r) C(2r,r) C(2k,k) (1 + rp(2H_2k - 2H_k + H_floor(p/2))) mod p^2.
inline CheckRecord check_nc11(unsigned long p, long r, long k,
                              bool perturb = false) {
    CheckRecord rec{
        .id = "nc11", .paper_label = "(nc-11)", .p = p, .r = r, .k = k};
    if (r < 0 || k < 0 || 2 * k > static_cast<long>(p) - 1) {
        throw precondition_error(
            "check_nc11: need r >= 0 and 0 <= k <= (p-1)/2");
    }
    const PadicContext ctx(p, 2);
    const BigRational quarter = make_rational(1, 4u);
    const unsigned long ku = static_cast<unsigned long>(k);
    const unsigned long ru = static_cast<unsigned long>(r);
    const Residue lhs = reduce_rational(
        pow_rational(quarter, static_cast<long>(ku + ru * p)) *
            BigRational(binomial(2 * ru * p + 2 * ku, ru * p + ku)),
        ctx);
    const Residue correction =
        Residue(2, ctx) * (harmonic_mod(2 * ku, ctx) - harmonic_mod(ku, ctx)) +
        harmonic_mod(p / 2, ctx);
    const Residue rhs =
        reduce_rational(pow_rational(quarter, k + r), ctx) *
        reduce_integer(binomial(2 * ru, ru), ctx) *
        reduce_integer(binomial(2 * ku, ku), ctx) *
        (Residue(1, ctx) + Residue(BigInt(ru * p), ctx) * correction);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// (nb-7): for odd residue class, the three weighted sums over k < p with
/// inner weights sum 1/(-a-1+i), sum 1/(a+i) and H_k/2 agree mod p.
inline CheckRecord check_nb7(unsigned long p, const BigRational& a,
                             bool perturb = false) {
    CheckRecord rec{.id = "nb7", .paper_label = "(nb-7)", .p = p, .a = a};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_even()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), false));
    }
    if (denominator(a) == 1) {
        return skip_record(rec, detail::integer_parameter_note(a));
    }
    BigRational s1 = 0, s2 = 0, s3 = 0;
    BigRational w1 = 0, w2 = 0, h_k = 0;
    detail::CentralSquareBase base;
    for (unsigned long k = 0; k + 1 <= p; ++k) {
        if (k > 0) base.advance();
        const BigRational binpart =
            base.value() *
            rational_binomial(a + BigInt(k), static_cast<long>(2 * k));
        if (sgn(binpart) == 0) break;
        if (k > 0) {
            w1 += 1 / (-a - 1 + BigInt(k));
            w2 += 1 / (a + BigInt(k));
            h_k += BigRational(1, k);
        }
        s1 += binpart * w1;
        s2 += binpart * w2;
        s3 += binpart * h_k / 2;
    }
    const PadicContext ctx(p, 1);
    const Residue r1 = reduce_rational(s1, ctx);
    const Residue r2 = reduce_rational(s2, ctx);
    const Residue r3 = reduce_rational(s3, ctx);
    rec.lhs = r1.str();
    rec.rhs = r3.str();
    rec.modulus = ctx.modulus().get_str();
    rec.note = "middle sum " + r2.str();
    rec.status = (residues_match(r1, r3, perturb) && r2 == r3)
                     ? CheckStatus::pass
                     : CheckStatus::fail;
    return rec;
}

/// Block congruence (nb-10): the 3F2 summands over one window
/// k in [rp, (r+1)p) add to 0 mod p^2 when the residue class is odd.
inline CheckRecord check_block_theorem1(unsigned long p, const BigRational& a,
                                        long r, bool perturb = false) {
    CheckRecord rec{.id = "nb10", .paper_label = "(nb-10)", .p = p, .a = a,
                    .r = r};
    if (r < 0) {
        throw precondition_error("check_block_theorem1: need r >= 0");
    }
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    if (param.is_even()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), false));
    }
    const Residue lhs =
        block_sum_3f2_mod(a, static_cast<unsigned long>(r), ctx);
    finish_residue_check(rec, lhs, Residue(0, ctx), perturb);
    return rec;
}

/// (nb-16): the sum truncated at (p-1)/2 agrees mod p^2 with the sum
/// truncated at the odd residue class, and the latter vanishes exactly.
inline CheckRecord check_nb16(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "nb16", .paper_label = "(nb-16)", .p = p, .a = a};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_even()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), false));
    }
    const unsigned long ra = param.residue_class();
    const auto top = [&](unsigned long k) -> BigRational { return BigRational(BigInt(ra + k)); };
    const BigRational s_half =
        detail::binomial_weighted_sum((p - 1) / 2, top, detail::one_weight);
    const BigRational s_ra =
        detail::binomial_weighted_sum(ra, top, detail::one_weight);
    const PadicContext ctx(p, 2);
    const Residue lhs = reduce_rational(s_half, ctx);
    rec.note = "inner sum exactly " + s_ra.get_str();
    finish_residue_check(rec, lhs, Residue(0, ctx), perturb);
    if (sgn(s_ra) != 0 || reduce_rational(s_ra, ctx) != lhs) {
        rec.status = CheckStatus::fail;
    }
    return rec;
}

/// (nb-17): the half-range sum with the delta/r inverse weights is
/// congruent mod p to the exactly vanishing 2rH_2k - 3rH_k sum.
inline CheckRecord check_nb17(unsigned long p, const BigRational& a, long r,
                              bool perturb = false) {
    CheckRecord rec{.id = "nb17", .paper_label = "(nb-17)", .p = p, .a = a,
                    .r = r};
    if (r < 0) {
        throw precondition_error("check_nb17: need r >= 0");
    }
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_even()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), false));
    }
    if (param.residue_class() < (p - 1) / 2) {
        return skip_record(rec, detail::low_residue_note(param.residue_class(), p));
    }
    const unsigned long ra = param.residue_class();
    const BigRational delta = param.delta();
    const BigRational rr(r);
    BigRational t1 = 0, t2 = 0, h_k = 0, h_2k = 0;
    const auto weight = [&](unsigned long k) -> BigRational {
        if (k > 0) {
            t1 += 1 / BigRational(BigInt(ra + k));
            t2 += 1 / BigRational(BigInt(k) - BigInt(ra) - 1);
            h_k += BigRational(1, k);
            h_2k += BigRational(1, 2 * k - 1) + BigRational(1, 2 * k);
        }
        return (rr + delta) * t1 + (rr - delta) * t2 + 2 * rr * h_2k -
               4 * rr * h_k;
    };
    const auto top = [&](unsigned long k) -> BigRational { return BigRational(BigInt(ra + k)); };
    const BigRational lhs_sum =
        detail::binomial_weighted_sum((p - 1) / 2, top, weight);
    const BigRational inner =
        rr * weighted_sum(ra, SumWeight::two_h2k_minus_3hk);
    const PadicContext ctx(p, 1);
    const Residue lhs = reduce_rational(lhs_sum, ctx);
    rec.note = "inner sum exactly " + inner.get_str();
    finish_residue_check(rec, lhs, Residue(0, ctx), perturb);
    if (sgn(inner) != 0) rec.status = CheckStatus::fail;
    return rec;
}

/// (nb-14): rewrite of the shifted binomial C(a+k+rp, 2k+2rp) in terms of
/// C(a+rp, 2rp) C(<a>+k, 2k) and a first-order inverse-sum correction.
/// Valid for k up to min((p-1)/2, <a>_p); beyond the residue class the
/// displayed right side degenerates.
inline CheckRecord check_nb14(unsigned long p, const BigRational& a, long r,
                              long k, bool perturb = false) {
    CheckRecord rec{.id = "nb14", .paper_label = "(nb-14)", .p = p, .a = a,
                    .r = r, .k = k};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    const unsigned long ra = param.residue_class();
    if (r < 0 || k < 0 || 2 * k > static_cast<long>(p) - 1 ||
        k > static_cast<long>(ra)) {
        throw precondition_error(
            "check_nb14: need r >= 0 and 0 <= k <= min((p-1)/2, <a>_p)");
    }
    const PadicContext ctx(p, 2);
    const BigRational delta = param.delta();
    const BigRational rr(r);
    const unsigned long ku = static_cast<unsigned long>(k);
    const unsigned long ru = static_cast<unsigned long>(r);
    const Residue lhs = reduce_rational(
        rational_binomial(a + BigInt(ku + ru * p),
                          static_cast<long>(2 * ku + 2 * ru * p)),
        ctx);
    BigRational w = 0;
    for (unsigned long i = 1; i <= ku; ++i) {
        w += (rr + delta) / BigRational(BigInt(ra + i));
        w += (rr - delta) / BigRational(BigInt(i) - BigInt(ra) - 1);
    }
    w -= 2 * rr * harmonic_exact(2 * ku);
    const BigRational rhs_exact =
        rational_binomial(a + BigInt(ru * p), static_cast<long>(2 * ru * p)) *
        BigRational(binomial(ra + ku, 2 * ku)) * (1 + BigInt(p) * w);
    finish_residue_check(rec, lhs, reduce_rational(rhs_exact, ctx), perturb);
    return rec;
}

/// (nb-15): the full window sum rewritten through (nb-14); half-range sum
/// with the combined weight on the right.
inline CheckRecord check_nb15(unsigned long p, const BigRational& a, long r,
                              bool perturb = false) {
    CheckRecord rec{.id = "nb15", .paper_label = "(nb-15)", .p = p, .a = a,
                    .r = r};
    if (r < 0) {
        throw precondition_error("check_nb15: need r >= 0");
    }
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_even()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), false));
    }
    if (param.residue_class() < (p - 1) / 2) {
        return skip_record(rec, detail::low_residue_note(param.residue_class(), p));
    }
    const unsigned long ra = param.residue_class();
    const BigRational delta = param.delta();
    const BigRational rr(r);
    const unsigned long ru = static_cast<unsigned long>(r);
    const PadicContext ctx(p, 2);

    const BigRational quarter = make_rational(-1, 4u);
    BigRational lhs_exact = 0;
    for (unsigned long k = 0; k + 1 <= p; ++k) {
        const unsigned long m = k + ru * p;
        const BigRational big(binomial(2 * m, m));
        lhs_exact += big * big *
                     rational_binomial(a + BigInt(m), static_cast<long>(2 * m)) *
                     pow_rational(quarter, static_cast<long>(m));
    }

    BigRational t1 = 0, t2 = 0, h_k = 0, h_2k = 0;
    const auto weight = [&](unsigned long k) -> BigRational {
        if (k > 0) {
            t1 += 1 / BigRational(BigInt(ra + k));
            t2 += 1 / BigRational(BigInt(k) - BigInt(ra) - 1);
            h_k += BigRational(1, k);
            h_2k += BigRational(1, 2 * k - 1) + BigRational(1, 2 * k);
        }
        return 1 + BigInt(p) * ((rr + delta) * t1 + (rr - delta) * t2 +
                                2 * rr * h_2k - 4 * rr * h_k);
    };
    const auto top = [&](unsigned long k) -> BigRational { return BigRational(BigInt(ra + k)); };
    const BigRational inner =
        detail::binomial_weighted_sum((p - 1) / 2, top, weight);
    const BigRational c2r(binomial(2 * ru, ru));
    const BigRational rhs_exact =
        pow_rational(make_rational(-1, 4u), static_cast<long>(ru * p)) * c2r *
        c2r *
        rational_binomial(a + BigInt(ru * p), static_cast<long>(2 * ru * p)) *
        inner;
    finish_residue_check(rec, reduce_rational(lhs_exact, ctx),
                         reduce_rational(rhs_exact, ctx), perturb);
    return rec;

}

/// (nc-1): Pochhammer-ratio shift congruence mod p^2 with the
/// H_floor(-pa) correction, for the four special parameters.
inline CheckRecord check_nc1(unsigned long p, const BigRational& a, long r,
                             long k, bool perturb = false) {
    CheckRecord rec{.id = "nc1", .paper_label = "(nc-1)", .p = p, .a = a,
                    .r = r, .k = k};
    if (r < 0 || k < 0 || k > static_cast<long>(p) - 1) {
        throw precondition_error("check_nc1: need r >= 0 and 0 <= k <= p-1");
    }
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicContext ctx(p, 2);
    const unsigned long ku = static_cast<unsigned long>(k);
    const unsigned long ru = static_cast<unsigned long>(r);
    const auto ratio = [&](unsigned long m) {
        const BigRational fac(factorial(m));
        return pochhammer(-a, m) * pochhammer(a + 1, m) / (fac * fac);
    };
    const Residue lhs = reduce_rational(ratio(ku + ru * p), ctx);
    BigRational tail = 0;
    for (unsigned long i = 0; i < ku; ++i) {
        tail += 1 / (-a + BigInt(i)) + 1 / (a + 1 + BigInt(i));
    }
    const BigRational correction =
        1 + 2 * BigInt(ru * p) * harmonic_exact(floor_neg_pa(a, p)) -
        2 * BigInt(ru * p) * harmonic_exact(ku) + BigInt(ru * p) * tail;
    const Residue rhs =
        reduce_rational(ratio(ru) * ratio(ku) * correction, ctx);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// (nc-6): H_floor(-pa) = H_<a>_p mod p for the four special parameters.
inline CheckRecord check_nc6(unsigned long p, const BigRational& a,
                             bool perturb = false) {
    CheckRecord rec{.id = "nc6", .paper_label = "(nc-6)", .p = p, .a = a};
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicContext ctx(p, 1);
    const Residue lhs = harmonic_mod(floor_neg_pa(a, p), ctx);
    const Residue rhs = harmonic_mod(least_residue(a, p), ctx);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

namespace detail {

/// Inner sum of (nc-13)/(nc-14): the full-range weighted sum with
/// 2H_2k - 4H_k + 2H_<a> + H_floor(p/2) + paired inverse tails on a.
inline BigRational nc14_style_sum(unsigned long p, const BigRational& a,
                                  unsigned long ra, const BigRational& scale_r) {
    const BigRational h_ra = harmonic_exact(ra);
    const BigRational h_half = harmonic_exact(p / 2);
    BigRational h_k = 0, h_2k = 0, tail = 0;
    const auto weight = [&](unsigned long k) -> BigRational {
        if (k > 0) {
            h_k += BigRational(1, k);
            h_2k += BigRational(1, 2 * k - 1) + BigRational(1, 2 * k);
            tail += 1 / (-a + BigInt(k) - 1) + 1 / (a + BigInt(k));
        }
        return 1 + scale_r * (2 * h_2k - 4 * h_k + 2 * h_ra + h_half + tail);
    };
    const auto top = [&](unsigned long k) -> BigRational { return a + BigInt(k); };
    return binomial_weighted_sum(p - 1, top, weight);
}

} // namespace detail

/// (nc-14): the combined-weight sum vanishes mod p for special a with
/// even residue class.
inline CheckRecord check_nc14(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "nc14", .paper_label = "(nc-14)", .p = p, .a = a};
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    const unsigned long ra = param.residue_class();
    // The weight alone, without the leading 1: subtract the plain sum.
    const BigRational with_one = detail::nc14_style_sum(p, a, ra, BigRational(1));
    const BigRational plain = detail::nc14_style_sum(p, a, ra, BigRational(0));
    const BigRational sum = with_one - plain;
    const PadicContext ctx(p, 1);
    finish_residue_check(rec, reduce_rational(sum, ctx), Residue(0, ctx),
                         perturb);
    return rec;
}

/// (nc-12): single-term form of the window rewrite for special a, any
/// 0 <= k <= p-1, with the residue-class harmonic correction.
inline CheckRecord check_nc12(unsigned long p, const BigRational& a, long r,
                              long k, bool perturb = false) {
    CheckRecord rec{.id = "nc12", .paper_label = "(nc-12)", .p = p, .a = a,
                    .r = r, .k = k};
    if (r < 0 || k < 0 || k > static_cast<long>(p) - 1) {
        throw precondition_error("check_nc12: need r >= 0 and 0 <= k <= p-1");
    }
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    const unsigned long ra = param.residue_class();
    const unsigned long ku = static_cast<unsigned long>(k);
    const unsigned long ru = static_cast<unsigned long>(r);
    const unsigned long m = ku + ru * p;
    const int lhs_sign = (m % 2 == 0) ? 1 : -1;
    const Residue lhs = reduce_rational(
        BigRational(lhs_sign) * BigRational(binomial(2 * m, m)) *
            rational_binomial(a + BigInt(m), static_cast<long>(2 * m)),
        ctx);
    BigRational tail = 0;
    for (unsigned long i = 0; i < ku; ++i) {
        tail += 1 / (-a + BigInt(i)) + 1 / (a + 1 + BigInt(i));
    }
    const BigRational correction =
        1 + 2 * BigInt(ru * p) * harmonic_exact(ra) -
        2 * BigInt(ru * p) * harmonic_exact(ku) + BigInt(ru * p) * tail;
    const int rhs_sign = ((ru + ku) % 2 == 0) ? 1 : -1;
    const Residue rhs = reduce_rational(
        BigRational(rhs_sign) * BigRational(binomial(2 * ru, ru)) *
            rational_binomial(a + BigInt(ru), static_cast<long>(2 * ru)) *
            BigRational(binomial(2 * ku, ku)) *
            rational_binomial(a + BigInt(ku), static_cast<long>(2 * ku)) *
            correction,
        ctx);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// (nc-13): full window sum against the factored single-window sum with
/// the combined first-order weight, mod p^2.
inline CheckRecord check_nc13(unsigned long p, const BigRational& a, long r,
                              bool perturb = false) {
    CheckRecord rec{.id = "nc13", .paper_label = "(nc-13)", .p = p, .a = a,
                    .r = r};
    if (r < 0) {
        throw precondition_error("check_nc13: need r >= 0");
    }
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    const unsigned long ra = param.residue_class();
    const unsigned long ru = static_cast<unsigned long>(r);
    const BigRational quarter = make_rational(-1, 4u);

    BigRational lhs_exact = 0;
    for (unsigned long k = 0; k + 1 <= p; ++k) {
        const unsigned long m = k + ru * p;
        const BigRational big(binomial(2 * m, m));
        lhs_exact += big * big *
                     rational_binomial(a + BigInt(m), static_cast<long>(2 * m)) *
                     pow_rational(quarter, static_cast<long>(m));
    }
    const BigRational inner =
        detail::nc14_style_sum(p, a, ra, BigRational(BigInt(ru * p)));
    const BigRational c2r(binomial(2 * ru, ru));
    const BigRational rhs_exact =
        c2r * c2r *
        rational_binomial(a + BigInt(ru), static_cast<long>(2 * ru)) *
        pow_rational(quarter, r) * inner;
    finish_residue_check(rec, reduce_rational(lhs_exact, ctx),
                         reduce_rational(rhs_exact, ctx), perturb);
    return rec;
}

/// (nc-15): replacing a by its residue class inside the (nc-14) sum
/// preserves it mod p.
inline CheckRecord check_nc15(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "nc15", .paper_label = "(nc-15)", .p = p, .a = a};
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    if (param.residue_class() < (p - 1) / 2) {
        return skip_record(rec, detail::low_residue_note(param.residue_class(), p));
    }
    const unsigned long ra = param.residue_class();
    const BigRational with_one = detail::nc14_style_sum(p, a, ra, BigRational(1));
    const BigRational plain = detail::nc14_style_sum(p, a, ra, BigRational(0));
    const BigRational lhs_sum = with_one - plain;

    const BigRational h_ra = harmonic_exact(ra);
    const BigRational h_half = harmonic_exact(p / 2);
    BigRational h_k = 0, h_2k = 0, tail = 0;
    const auto weight = [&](unsigned long k) -> BigRational {
        if (k > 0) {
            h_k += BigRational(1, k);
            h_2k += BigRational(1, 2 * k - 1) + BigRational(1, 2 * k);
            tail += 1 / BigRational(BigInt(k) - 1 - BigInt(ra)) +
                    1 / BigRational(BigInt(ra + k));
        }
        return 2 * h_2k - 4 * h_k + 2 * h_ra + h_half + tail;
    };
    const auto top = [&](unsigned long k) -> BigRational { return BigRational(BigInt(ra + k)); };
    const BigRational rhs_sum =
        detail::binomial_weighted_sum(p - 1, top, weight);
    const PadicContext ctx(p, 1);
    finish_residue_check(rec, reduce_rational(lhs_sum, ctx),
                         reduce_rational(rhs_sum, ctx), perturb);
    return rec;
}

/// (nc-16): exact closed form of the residue-class sum with the combined
/// weight; both sides are exact rationals.
inline CheckRecord check_nc16(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "nc16", .paper_label = "(nc-16)", .p = p, .a = a};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    const unsigned long ra = param.residue_class();
    const BigRational h_ra = harmonic_exact(ra);
    const BigRational h_half = harmonic_exact(p / 2);
    BigRational h_k = 0, h_2k = 0, tail = 0;
    const auto weight = [&](unsigned long k) -> BigRational {
        if (k > 0) {
            h_k += BigRational(1, k);
            h_2k += BigRational(1, 2 * k - 1) + BigRational(1, 2 * k);
            tail += 1 / BigRational(BigInt(ra + k));
        }
        return 2 * h_2k - 4 * h_k + 2 * h_ra + h_half + tail;
    };
    const auto top = [&](unsigned long k) -> BigRational { return BigRational(BigInt(ra + k)); };
    const BigRational lhs =
        detail::binomial_weighted_sum(p - 1, top, weight);
    const BigRational central(binomial(ra, ra / 2));
    const BigRational rhs = central * central /
                            BigRational(pow_integer(BigInt(4), ra)) *
                            (h_half + h_ra / 2 - harmonic_exact(ra / 2));
    finish_exact_check(rec, lhs, rhs, perturb);
    return rec;
}

/// (nc-17): chain from the -<a> inverse-tail sum through the reflected
/// b = p - <a> form to its closed form; congruence and exact links
/// verified separately.
inline CheckRecord check_nc17(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "nc17", .paper_label = "(nc-17)", .p = p, .a = a};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    if (param.residue_class() < (p - 1) / 2) {
        return skip_record(rec, detail::low_residue_note(param.residue_class(), p));
    }
    const unsigned long ra = param.residue_class();
    const unsigned long b = p - ra;

    BigRational tail1 = 0;
    const auto w1 = [&](unsigned long k) -> BigRational {
        if (k > 0) tail1 += 1 / BigRational(BigInt(k) - 1 - BigInt(ra));
        return tail1;
    };
    const BigRational l1 = detail::binomial_weighted_sum(
        p - 1, [&](unsigned long k) { return BigRational(BigInt(ra + k)); }, w1);

    BigRational tail2 = 0;
    const auto w2 = [&](unsigned long k) -> BigRational {
        if (k > 0) tail2 += 1 / BigRational(BigInt(b + k) - 1);
        return tail2;
    };
    const BigRational l2 = detail::binomial_weighted_sum(
        p - 1,
        [&](unsigned long k) { return BigRational(BigInt(k) - BigInt(b)); }, w2);

    BigRational tail3 = 0;
    const auto w3 = [&](unsigned long k) -> BigRational {
        if (k > 0) tail3 += 1 / BigRational(BigInt(b + k) - 1);
        return tail3;
    };
    const BigRational l3 = detail::binomial_weighted_sum(
        p - 1,
        [&](unsigned long k) { return BigRational(BigInt(b + k) - 1); }, w3);

    const BigRational central(binomial(b - 1, (b - 1) / 2));
    const BigRational l4 = central * central /
                           BigRational(pow_integer(BigInt(4), b - 1)) *
                           (make_rational(3, 2u) * harmonic_exact(b - 1) -
                            harmonic_exact((b - 1) / 2));

    const PadicContext ctx(p, 1);
    const Residue r1 = reduce_rational(l1, ctx);
    const Residue r4 = reduce_rational(l4, ctx);
    rec.note = "links: reflected sum " + l2.get_str() + ", rewritten sum " +
               l3.get_str();
    finish_residue_check(rec, r1, r4, perturb);
    if (l2 != l3 || l3 != l4 || r1 != reduce_rational(l2, ctx)) {
        rec.status = CheckStatus::fail;
    }
    return rec;
}

/// (nc-18): the two closed forms C(b-1,(b-1)/2)^2/4^(b-1) and
/// C(<a>,<a>/2)^2/4^<a> agree mod p, each equal to its plain sum exactly.
inline CheckRecord check_nc18(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "nc18", .paper_label = "(nc-18)", .p = p, .a = a};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    const unsigned long ra = param.residue_class();
    const unsigned long b = p - ra;
    const BigRational cb(binomial(b - 1, (b - 1) / 2));
    const BigRational e1 = cb * cb / BigRational(pow_integer(BigInt(4), b - 1));
    const BigRational e2 = detail::binomial_weighted_sum(
        p - 1,
        [&](unsigned long k) { return BigRational(BigInt(b + k) - 1); },
        detail::one_weight);
    const BigRational e3 = detail::binomial_weighted_sum(
        p - 1,
        [&](unsigned long k) { return BigRational(BigInt(k) - BigInt(ra) - 1); },
        detail::one_weight);
    const BigRational e4 = detail::binomial_weighted_sum(
        p - 1,
        [&](unsigned long k) { return BigRational(BigInt(ra + k)); },
        detail::one_weight);
    const BigRational ca(binomial(ra, ra / 2));
    const BigRational closed = ca * ca / BigRational(pow_integer(BigInt(4), ra));

    const PadicContext ctx(p, 1);
    const Residue lhs = reduce_rational(e1, ctx);
    const Residue rhs = reduce_rational(closed, ctx);
    rec.note = "links: e2 " + e2.get_str() + ", e3 " + e3.get_str() + ", e4 " +
               e4.get_str();
    finish_residue_check(rec, lhs, rhs, perturb);
    if (e1 != e2 || e3 != e4 || e4 != closed ||
        reduce_rational(e2, ctx) != reduce_rational(e3, ctx)) {
        rec.status = CheckStatus::fail;
    }
    return rec;
}

/// (nc-19): the (nc-14) sum against the assembled closed form mod p.
inline CheckRecord check_nc19(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "nc19", .paper_label = "(nc-19)", .p = p, .a = a};
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicParameter param(a, PadicContext(p, 1));
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    const unsigned long ra = param.residue_class();
    const BigRational with_one = detail::nc14_style_sum(p, a, ra, BigRational(1));
    const BigRational plain = detail::nc14_style_sum(p, a, ra, BigRational(0));
    const BigRational lhs_sum = with_one - plain;

    const BigRational central(binomial(ra, ra / 2));
    const BigRational lead =
        central * central / BigRational(pow_integer(BigInt(4), ra));
    const BigRational rhs_sum =
        lead * (harmonic_exact(p / 2) + harmonic_exact(ra) / 2 -
                harmonic_exact(ra / 2) +
                make_rational(3, 2u) * harmonic_exact(p - 1 - ra) -
                harmonic_exact((p - 1 - ra) / 2));
    const PadicContext ctx(p, 1);
    finish_residue_check(rec, reduce_rational(lhs_sum, ctx),
                         reduce_rational(rhs_sum, ctx), perturb);
    return rec;
}

/// Block congruence (nc-7): one window of the 3F2 equals the Gamma_p
/// product times the r-th outer term, mod p^2, for special a with even
/// residue class.
inline CheckRecord check_block_theorem2(unsigned long p, const BigRational& a,
                                        long r, bool perturb = false) {
    CheckRecord rec{.id = "nc7", .paper_label = "(nc-7)", .p = p, .a = a,
                    .r = r};
    if (r < 0) {
        throw precondition_error("check_block_theorem2: need r >= 0");
    }
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    const unsigned long ru = static_cast<unsigned long>(r);
    const Residue lhs = block_sum_3f2_mod(a, ru, ctx);
    const Residue gp = gamma_p(-a / 2, ctx);
    const Residue gq = gamma_p((a + 1) / 2, ctx);
    const int sign = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
    const Residue outer_term = sum_3f2_mod(a, ru, ru + 1, ctx);
    const Residue rhs = Residue(sign, ctx) * gp * gp * gq * gq * outer_term;
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// Eisenstein relations: additivity of the Fermat quotient over products
/// and powers, verified over a fixed internal grid of small integers.
inline CheckRecord check_l1(unsigned long p, bool perturb = false) {
    CheckRecord rec{.id = "l1", .paper_label = "(l1) Eisenstein", .p = p};
    const PadicContext ctx(p, 1);
    unsigned long checked = 0;
    bool ok = true;
    std::string first_bad;
    for (unsigned long x = 2; x <= 30 && ok; ++x) {
        if (x % p == 0) continue;
        const Residue qx = fermat_quotient(BigRational(x), p);
        for (unsigned long y = x; y <= 30; ++y) {
            if (y % p == 0) continue;
            const Residue qy = fermat_quotient(BigRational(y), p);
            const Residue lhs = fermat_quotient(BigRational(x * y), p);
            const Residue rhs = qx + qy;
            ++checked;
            if (!residues_match(lhs, rhs, perturb)) {
                ok = false;
                first_bad = "q(" + std::to_string(x) + "*" + std::to_string(y) +
                            ") != q(" + std::to_string(x) + ")+q(" +
                            std::to_string(y) + ")";
                break;
            }
        }
        for (unsigned long e = 1; e <= 5 && ok; ++e) {
            const Residue lhs =
                fermat_quotient(pow_rational(BigRational(x), e), p);
            const Residue rhs = Residue(BigInt(e), ctx) * qx;
            ++checked;
            if (!residues_match(lhs, rhs, perturb)) {
                ok = false;
                first_bad = "q(" + std::to_string(x) + "^" + std::to_string(e) +
                            ") != " + std::to_string(e) + " q(" +
                            std::to_string(x) + ")";
            }
        }
    }
    rec.modulus = ctx.modulus().get_str();
    rec.note = ok ? std::to_string(checked) + " product/power relations hold"
                  : first_bad;
    rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return rec;
}

/// Lehmer: H_floor(p/2) = -2 q_p(2) mod p.
inline CheckRecord check_l2(unsigned long p, bool perturb = false) {
    CheckRecord rec{.id = "l2", .paper_label = "(l2) Lehmer", .p = p};
    const PadicContext ctx(p, 1);
    const Residue lhs = harmonic_mod(p / 2, ctx);
    const Residue rhs = Residue(-2, ctx) * fermat_quotient(BigRational(2), p);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

} // namespace hypercong
