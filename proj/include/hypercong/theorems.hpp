#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "hypercong/congruences.hpp"
#include "hypercong/hyperseries.hpp"
#include "hypercong/padic.hpp"
#include "hypercong/rational.hpp"
#include "hypercong/record.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

/// (-1)^((p+1)/2) Gamma_p(-a/2)^2 Gamma_p((a+1)/2)^2, the right side of
/// the even-residue-class branch.
inline Residue gamma_branch_product(const BigRational& a,
                                    const PadicContext& ctx) {
    const Residue gp = gamma_p(-a / 2, ctx);
    const Residue gq = gamma_p((a + 1) / 2, ctx);
    const int sign = ((ctx.prime() + 1) / 2) % 2 == 0 ? 1 : -1;
    return Residue(sign, ctx) * gp * gp * gq * gq;
}

/// (na-2): the p-term 3F2 vanishes mod p^2 for odd residue class and
/// equals the Gamma_p product for even residue class.
inline CheckRecord verify_na2(unsigned long p, const BigRational& a,
                              bool perturb = false) {
    CheckRecord rec{.id = "na2", .paper_label = "(na-2)", .p = p, .a = a};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    rec.branch = param.is_odd() ? "odd" : "even";
    const Residue lhs = truncated_3f2_mod(a, p, ctx);
    const Residue rhs =
        param.is_odd() ? Residue(0, ctx) : gamma_branch_product(a, ctx);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// Theorem 1.1 (na-4): the np-term 3F2 vanishes mod p^2 whenever the
/// residue class of a is odd.
inline CheckRecord verify_theorem1(unsigned long p, const BigRational& a,
                                   long n, bool perturb = false) {
    CheckRecord rec{.id = "thm1", .paper_label = "Theorem 1.1 (na-4)", .p = p,
                    .a = a, .n = n};
    if (!detail::denominator_ok(a, p)) {
        return skip_record(rec, detail::denominator_note(a, p));
    }
    if (n < 1) {
        return skip_record(rec, "n must be >= 1");
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    if (param.is_even()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), false));
    }
    rec.branch = "odd";
    const Residue lhs =
        truncated_3f2_mod(a, static_cast<unsigned long>(n) * p, ctx);
    finish_residue_check(rec, lhs, Residue(0, ctx), perturb);
    return rec;
}

/// Theorem 1.2 (na-5): for the four special parameters with even residue
/// class, the np-term sum equals the Gamma_p product times the n-term sum.
inline CheckRecord verify_theorem2(unsigned long p, const BigRational& a,
                                   long n, bool perturb = false) {
    CheckRecord rec{.id = "thm2", .paper_label = "Theorem 1.2 (na-5)", .p = p,
                    .a = a, .n = n};
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    if (n < 1) {
        return skip_record(rec, "n must be >= 1");
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    rec.branch = "even";
    const unsigned long nn = static_cast<unsigned long>(n);
    const Residue lhs = truncated_3f2_mod(a, nn * p, ctx);
    const Residue rhs =
        gamma_branch_product(a, ctx) * truncated_3f2_mod(a, nn, ctx);
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// Corollary: with n = p^(r-1) iterated, the p^r-term sum equals the
/// Gamma_p product raised to the r-th power, mod p^2.
inline CheckRecord verify_corollary(unsigned long p, const BigRational& a,
                                    long r, bool perturb = false) {
    CheckRecord rec{.id = "corollary", .paper_label = "Corollary", .p = p,
                    .a = a, .r = r};
    if (!is_special4(a)) {
        return skip_record(rec, detail::special4_note(a));
    }
    if (r < 1) {
        return skip_record(rec, "r must be >= 1");
    }
    const PadicContext ctx(p, 2);
    const PadicParameter param(a, ctx);
    if (param.is_odd()) {
        return skip_record(rec, detail::parity_note(param.residue_class(), true));
    }
    rec.branch = "even";
    unsigned long terms = 1;
    for (long i = 0; i < r; ++i) terms *= p;
    const Residue lhs = truncated_3f2_mod(a, terms, ctx);
    const Residue rhs =
        gamma_branch_product(a, ctx).pow(static_cast<unsigned long>(r));
    finish_residue_check(rec, lhs, rhs, perturb);
    return rec;
}

/// Reproducible default parameter corpus:
/// {m/d : 1 <= d <= 6, -6 <= m <= 6, gcd(m,d) = 1, p does not divide d},
/// sorted ascending.
inline std::vector<BigRational> default_a_grid(unsigned long p) {
    std::vector<BigRational> grid;
    for (unsigned long d = 1; d <= 6; ++d) {
        if (d % p == 0) continue;
        for (long m = -6; m <= 6; ++m) {
            const unsigned long mag = static_cast<unsigned long>(m < 0 ? -m : m);
            if (std::gcd(mag, d) != 1) continue;
            grid.push_back(make_rational(BigInt(m), BigInt(d)));
        }
    }
    std::sort(grid.begin(), grid.end(),
              [](const BigRational& x, const BigRational& y) { return x < y; });
    return grid;
}

/// Searches for a witness that the Theorem 1.2 relation does not extend
/// to non-special parameters with even residue class. A found witness is
/// the expected outcome and reported as a pass.
inline CheckRecord na5_sharpness_search(unsigned long prime_max,
                                        long n_max = 3) {
    CheckRecord rec{.id = "na5-sharpness",
                    .paper_label = "Remark after (na-5)"};
    for (unsigned long p = 5; p <= prime_max; ++p) {
        if (!is_prime(p)) continue;
        const PadicContext ctx(p, 2);
        for (const BigRational& a : default_a_grid(p)) {
            if (is_special4(a)) continue;
            const PadicParameter param(a, ctx);
            if (param.is_odd()) continue;
            const Residue factor = gamma_branch_product(a, ctx);
            for (long n = 2; n <= n_max; ++n) {
                const unsigned long nn = static_cast<unsigned long>(n);
                const Residue lhs = truncated_3f2_mod(a, nn * p, ctx);
                const Residue rhs = factor * truncated_3f2_mod(a, nn, ctx);
                if (lhs != rhs) {
                    rec.p = p;
                    rec.a = a;
                    rec.n = n;
                    rec.branch = "even";
                    rec.lhs = lhs.str();
                    rec.rhs = rhs.str();
                    rec.modulus = ctx.modulus().get_str();
                    rec.status = CheckStatus::pass;
                    rec.note = "expected-fail witness found: relation breaks "
                               "for non-special a";
                    return rec;
                }
            }
        }
    }
    rec.status = CheckStatus::pass;
    rec.modulus = "";
    rec.note = "search exhausted with no witness up to p = " +
               std::to_string(prime_max);
    return rec;
}

} // namespace hypercong
