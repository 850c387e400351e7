#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hypercong/congruences.hpp"
#include "hypercong/identities.hpp"
#include "hypercong/theorems.hpp"

namespace hypercong {

/// How a check's case list is expanded over a run configuration.
enum class ParamShape {
    prime_only,    // one case per prime
    prime_a,       // primes x parameter set
    prime_a_n,     // primes x parameters x n-range
    prime_a_r,     // primes x parameters x r-range (r taken from n-range)
    prime_r_k,     // primes x r-range x all valid k
    prime_a_r_k,   // primes x parameters x r-range x all valid k
    odd_n,         // odd n in the n-range
    even_n,        // even n in the n-range
    sequence_n,    // every n in the n-range
    witness_search // single case over the whole grid
};

struct CheckInfo {
    std::string id;
    std::string label;
    std::string summary;
    ParamShape shape;
};

inline const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog = {
        {"l1", "(l1) Eisenstein",
         "Fermat quotient additivity over products and powers, mod p",
         ParamShape::prime_only},
        {"l2", "(l2) Lehmer", "H_floor(p/2) = -2 q_p(2) mod p",
         ParamShape::prime_only},
        {"nx", "(nx)",
         "shifted central binomial C(2rp+2k, rp+k) expansion mod p^2",
         ParamShape::prime_r_k},
        {"nb1", "(nb-1)", "plain weighted sum vanishes for odd n",
         ParamShape::odd_n},
        {"nb2", "(nb-2)", "(2H_2k - 3H_k) weighted sum vanishes for odd n",
         ParamShape::odd_n},
        {"nb3", "(nb-3)", "(2H_(n+k) - H_k) weighted sum vanishes for odd n",
         ParamShape::odd_n},
        {"nb7", "(nb-7)",
         "three inverse-weighted sums agree mod p for odd residue class",
         ParamShape::prime_a},
        {"nb10", "(nb-10)", "window sum vanishes mod p^2, odd residue class",
         ParamShape::prime_a_r},
        {"nb12", "(nb-12)", "squared form of (nx) mod p^2",
         ParamShape::prime_r_k},
        {"nb14", "(nb-14)", "shifted binomial rewrite mod p^2",
         ParamShape::prime_a_r_k},
        {"nb15", "(nb-15)", "window sum rewritten to half range mod p^2",
         ParamShape::prime_a_r},
        {"nb16", "(nb-16)", "half-range vs residue-class truncation, both zero",
         ParamShape::prime_a},
        {"nb17", "(nb-17)", "inverse-weighted half-range sum vanishes mod p",
         ParamShape::prime_a_r},
        {"nc1", "(nc-1)", "Pochhammer ratio shift congruence mod p^2",
         ParamShape::prime_a_r_k},
        {"nc2", "(nc-2)", "plain weighted sum closed form for even n",
         ParamShape::even_n},
        {"nc3", "(nc-3)", "H_k weighted sum closed form for even n",
         ParamShape::even_n},
        {"nc4", "(nc-4)", "H_2k weighted sum closed form for even n",
         ParamShape::even_n},
        {"nc5", "(nc-5)", "inverse-tail weighted sum closed form for even n",
         ParamShape::even_n},
        {"nc6", "(nc-6)", "H_floor(-pa) = H_<a> mod p for special a",
         ParamShape::prime_a},
        {"nc7", "(nc-7)", "window sum equals Gamma_p product times outer term",
         ParamShape::prime_a_r},
        {"nc10", "(nc-10)", "quarter-power shift congruence mod p^2",
         ParamShape::prime_r_k},
        {"nc11", "(nc-11)", "quarter-power central binomial shift mod p^2",
         ParamShape::prime_r_k},
        {"nc12", "(nc-12)", "signed binomial pair shift congruence mod p^2",
         ParamShape::prime_a_r_k},
        {"nc13", "(nc-13)", "window sum factored through first-order weight",
         ParamShape::prime_a_r},
        {"nc14", "(nc-14)", "combined-weight sum vanishes mod p",
         ParamShape::prime_a},
        {"nc15", "(nc-15)", "residue-class substitution preserves (nc-14) sum",
         ParamShape::prime_a},
        {"nc16", "(nc-16)", "exact closed form of the combined-weight sum",
         ParamShape::prime_a},
        {"nc17", "(nc-17)", "reflected inverse-tail sum chain",
         ParamShape::prime_a},
        {"nc18", "(nc-18)", "reflected closed forms agree mod p",
         ParamShape::prime_a},
        {"nc19", "(nc-19)", "(nc-14) sum against assembled closed form mod p",
         ParamShape::prime_a},
        {"na2", "(na-2)", "p-term 3F2 mod p^2: zero or Gamma_p product",
         ParamShape::prime_a},
        {"thm1", "Theorem 1.1 (na-4)", "np-term 3F2 vanishes mod p^2",
         ParamShape::prime_a_n},
        {"thm2", "Theorem 1.2 (na-5)",
         "np-term 3F2 equals Gamma_p product times n-term sum",
         ParamShape::prime_a_n},
        {"corollary", "Corollary", "p^r-term 3F2 equals Gamma_p product^r",
         ParamShape::prime_a_r},
        {"recA", "A-recurrence",
         "A_n = 0 and its three-term recurrence residual vanishes",
         ParamShape::sequence_n},
        {"recB", "B-recurrence",
         "B_n = 0 and its three-term recurrence residual vanishes",
         ParamShape::sequence_n},
        {"na5-sharpness", "Remark after (na-5)",
         "search for a non-special even-class witness breaking (na-5)",
         ParamShape::witness_search},
    };
    return catalog;
}

inline const CheckInfo* find_check(const std::string& id) {
    for (const CheckInfo& info : check_catalog()) {
        if (info.id == id) return &info;
    }
    return nullptr;
}

namespace detail {

/// Identity checks rendered as records.
inline CheckRecord identity_record(const std::string& id, unsigned long n,
                                   bool perturb) {
    CheckRecord rec{.id = id, .paper_label = find_check(id)->label,
                    .n = static_cast<long>(n)};
    if (id == "nb1") {
        finish_exact_check(rec, weighted_sum(n, SumWeight::unit),
                           BigRational(0), perturb);
    } else if (id == "nb2") {
        finish_exact_check(rec, weighted_sum(n, SumWeight::two_h2k_minus_3hk),
                           BigRational(0), perturb);
    } else if (id == "nb3") {
        finish_exact_check(rec, weighted_sum(n, SumWeight::two_hnk_minus_hk),
                           BigRational(0), perturb);
    } else {
        const BigRational central(binomial(n, n / 2));
        const BigRational lead =
            central * central / BigRational(pow_integer(BigInt(4), n));
        const BigRational h_n = harmonic_exact(n);
        if (id == "nc2") {
            finish_exact_check(rec, weighted_sum(n, SumWeight::unit), lead,
                               perturb);
        } else if (id == "nc3") {
            finish_exact_check(rec, weighted_sum(n, SumWeight::harmonic_k),
                               lead * h_n, perturb);
        } else if (id == "nc4") {
            finish_exact_check(rec, weighted_sum(n, SumWeight::harmonic_2k),
                               lead * h_n / 2, perturb);
        } else if (id == "nc5") {
            finish_exact_check(
                rec, weighted_sum(n, SumWeight::shifted_inverse_tail),
                lead * (make_rational(3, 2u) * h_n - harmonic_exact(n / 2)),
                perturb);
        } else {
            throw precondition_error("identity_record: unknown id " + id);
        }
    }
    return rec;
}

/// Sequence checks: value vanishes and the recurrence residual vanishes.
inline CheckRecord sequence_record(const std::string& id, unsigned long n,
                                   bool perturb) {
    const SequenceName name = id == "recA" ? SequenceName::A : SequenceName::B;
    CheckRecord rec{.id = id, .paper_label = find_check(id)->label,
                    .n = static_cast<long>(n)};
    const RecurrenceWitness witness = recurrence_residual(name, n);
    rec.note = "terms " + witness.terms[0].get_str() + ", " +
               witness.terms[1].get_str() + ", " + witness.terms[2].get_str();
    finish_exact_check(rec, witness.residual, BigRational(0), perturb);
    if (sgn(witness.terms[0]) != 0) rec.status = CheckStatus::fail;
    return rec;
}

} // namespace detail

/// Dispatch one fully specified case of any catalogued check.
inline CheckRecord run_check_case(const std::string& id, unsigned long p,
                                  const BigRational& a, long n_or_r, long k,
                                  bool perturb) {
    if (id == "l1") return check_l1(p, perturb);
    if (id == "l2") return check_l2(p, perturb);
    if (id == "nx") return check_nx(p, n_or_r, k, perturb);
    if (id == "nb7") return check_nb7(p, a, perturb);
    if (id == "nb10") return check_block_theorem1(p, a, n_or_r, perturb);
    if (id == "nb12") return check_nb12(p, n_or_r, k, perturb);
    if (id == "nb14") return check_nb14(p, a, n_or_r, k, perturb);
    if (id == "nb15") return check_nb15(p, a, n_or_r, perturb);
    if (id == "nb16") return check_nb16(p, a, perturb);
    if (id == "nb17") return check_nb17(p, a, n_or_r, perturb);
    if (id == "nc1") return check_nc1(p, a, n_or_r, k, perturb);
    if (id == "nc6") return check_nc6(p, a, perturb);
    if (id == "nc7") return check_block_theorem2(p, a, n_or_r, perturb);
    if (id == "nc10") return check_nc10(p, n_or_r, k, perturb);
    if (id == "nc11") return check_nc11(p, n_or_r, k, perturb);
    if (id == "nc12") return check_nc12(p, a, n_or_r, k, perturb);
    if (id == "nc13") return check_nc13(p, a, n_or_r, perturb);
    if (id == "nc14") return check_nc14(p, a, perturb);
    if (id == "nc15") return check_nc15(p, a, perturb);
    if (id == "nc16") return check_nc16(p, a, perturb);
    if (id == "nc17") return check_nc17(p, a, perturb);
    if (id == "nc18") return check_nc18(p, a, perturb);
    if (id == "nc19") return check_nc19(p, a, perturb);
    if (id == "na2") return verify_na2(p, a, perturb);
    if (id == "thm1") return verify_theorem1(p, a, n_or_r, perturb);
    if (id == "thm2") return verify_theorem2(p, a, n_or_r, perturb);
    if (id == "corollary") return verify_corollary(p, a, n_or_r, perturb);
    if (id == "nb1" || id == "nb2" || id == "nb3" || id == "nc2" ||
        id == "nc3" || id == "nc4" || id == "nc5") {
        return detail::identity_record(id, static_cast<unsigned long>(n_or_r),
                                       perturb);
    }
    if (id == "recA" || id == "recB") {
        return detail::sequence_record(id, static_cast<unsigned long>(n_or_r),
                                       perturb);
    }
    throw precondition_error("run_check_case: unknown check id " + id);
}

/// Largest valid k for the k-indexed checks, or -1 when the whole
/// k-family must be skipped for this parameter.
inline long max_k_for(const std::string& id, unsigned long p,
                      const BigRational& a) {
    if (id == "nx" || id == "nb12" || id == "nc11") {
        return static_cast<long>((p - 1) / 2);
    }
    if (id == "nc10" || id == "nc1" || id == "nc12") {
        return static_cast<long>(p - 1);
    }
    if (id == "nb14") {
        if (mpz_divisible_ui_p(denominator(a).get_mpz_t(), p)) return -1;
        const unsigned long ra = least_residue(a, p);
        return static_cast<long>(std::min((p - 1) / 2, ra));
    }
    throw precondition_error("max_k_for: " + id + " takes no k parameter");
}

} // namespace hypercong
