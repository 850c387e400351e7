#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypercong/report.hpp"

namespace hypercong {

namespace detail {

inline CheckRecord selftest_residue(const std::string& name, const Residue& got,
                                    long expected, bool perturb) {
    CheckRecord rec{.id = "selftest", .note = name};
    finish_residue_check(
        rec, got, Residue(BigInt(expected), got.context()), perturb);
    rec.note = name;
    return rec;
}

inline CheckRecord selftest_rational(const std::string& name,
                                     const BigRational& got,
                                     const std::string& expected,
                                     bool perturb) {
    CheckRecord rec{.id = "selftest", .note = name};
    finish_exact_check(rec, got, parse_rational(expected), perturb);
    rec.note = name;
    return rec;
}

template <typename Error, typename Fn>
inline CheckRecord selftest_throws(const std::string& name, Fn&& fn) {
    CheckRecord rec{.id = "selftest", .note = name, .modulus = "exact"};
    try {
        fn();
        rec.status = CheckStatus::fail;
        rec.rhs = "expected error";
    } catch (const Error&) {
        rec.status = CheckStatus::pass;
    } catch (const std::exception& e) {
        rec.status = CheckStatus::fail;
        rec.rhs = std::string("wrong error: ") + e.what();
    }
    return rec;
}

inline CheckRecord selftest_status(const std::string& name, CheckRecord inner,
                                   CheckStatus expected) {
    CheckRecord rec{.id = "selftest", .note = name};
    rec.lhs = to_string(inner.status);
    rec.rhs = to_string(expected);
    rec.modulus = inner.modulus;
    rec.status =
        inner.status == expected ? CheckStatus::pass : CheckStatus::fail;
    if (rec.status == CheckStatus::fail && !inner.note.empty()) {
        rec.note = name + " [" + inner.note + "]";
    }
    return rec;
}

} // namespace detail

/// Runs the built-in example corpus: frozen values for every operation
/// plus representative check outcomes. With perturb set, the value
/// comparisons are shifted by one and the run must fail.
inline Report self_test(bool perturb = false) {
    const auto t0 = std::chrono::steady_clock::now();
    using detail::selftest_rational;
    using detail::selftest_residue;
    using detail::selftest_status;
    using detail::selftest_throws;

    const PadicContext p5(5, 1), p5w(5, 2), p7(7, 1), p7w(7, 2);
    std::vector<CheckRecord> recs;

    recs.push_back(selftest_residue("mod_inverse(2) mod 5",
                                    mod_inverse(2, p5), 3, perturb));
    recs.push_back(selftest_residue("mod_inverse(3) mod 25",
                                    mod_inverse(3, p5w), 17, perturb));
    recs.push_back(selftest_throws<not_invertible_error>(
        "mod_inverse(5) mod 25 rejects", [&] { mod_inverse(5, p5w); }));
    recs.push_back(selftest_residue(
        "reduce(3/2) mod 5", reduce_rational(make_rational(3, 2u), p5), 4,
        perturb));
    recs.push_back(selftest_residue("reduce(7) mod 49",
                                    reduce_rational(BigRational(7), p7w), 7,
                                    perturb));
    recs.push_back(selftest_throws<denominator_divisible_error>(
        "reduce(1/5) mod 25 rejects",
        [&] { reduce_rational(make_rational(1, 5u), p5w); }));

    recs.push_back(selftest_rational(
        "binomial(2/3, 2)", rational_binomial(make_rational(2, 3u), 2), "-1/9",
        perturb));
    recs.push_back(selftest_rational(
        "binomial(7/3, 0)", rational_binomial(make_rational(7, 3u), 0), "1",
        perturb));
    recs.push_back(selftest_rational(
        "binomial(5, 2)", rational_binomial(BigRational(5), 2), "10", perturb));
    recs.push_back(
        selftest_rational("H_0", harmonic_exact(0), "0", perturb));
    recs.push_back(
        selftest_rational("H_2", harmonic_exact(2), "3/2", perturb));
    recs.push_back(
        selftest_rational("H_4", harmonic_exact(4), "25/12", perturb));

    recs.push_back(selftest_rational(
        "least_residue(-1/3, 5)",
        BigRational(least_residue(make_rational(-1, 3u), 5)), "3", perturb));
    recs.push_back(selftest_rational(
        "least_residue(-1/3, 7)",
        BigRational(least_residue(make_rational(-1, 3u), 7)), "2", perturb));
    recs.push_back(selftest_rational(
        "least_residue(0, 11)", BigRational(least_residue(BigRational(0), 11)),
        "0", perturb));
    recs.push_back(selftest_rational(
        "delta(3 at p=5)", PadicParameter(BigRational(3), p5).delta(), "0",
        perturb));
    recs.push_back(selftest_rational(
        "delta(-1/3 at p=5)",
        PadicParameter(make_rational(-1, 3u), p5).delta(), "-2/3", perturb));
    recs.push_back(selftest_rational(
        "delta(-1/2 at p=5)",
        PadicParameter(make_rational(-1, 2u), p5).delta(), "-1/2", perturb));

    recs.push_back(selftest_residue("q_5(2)",
                                    fermat_quotient(BigRational(2), 5), 3,
                                    perturb));
    recs.push_back(selftest_residue("q_13(1)",
                                    fermat_quotient(BigRational(1), 13), 0,
                                    perturb));
    recs.push_back(selftest_residue("q_7(2)",
                                    fermat_quotient(BigRational(2), 7), 2,
                                    perturb));
    recs.push_back(selftest_throws<not_coprime_error>(
        "q_5(10) rejects", [&] { fermat_quotient(BigRational(10), 5); }));

    recs.push_back(
        selftest_residue("H_2 mod 5", harmonic_mod(2, p5), 4, perturb));
    recs.push_back(
        selftest_residue("H_0 mod 7", harmonic_mod(0, p7), 0, perturb));
    recs.push_back(selftest_throws<denominator_divisible_error>(
        "H_5 mod 5 rejects", [&] { harmonic_mod(5, p5); }));

    recs.push_back(selftest_residue("gamma_5(1) mod 25",
                                    gamma_p(BigRational(1), p5w), 24, perturb));
    recs.push_back(selftest_residue("gamma_5(3) mod 5",
                                    gamma_p(BigRational(3), p5), 3, perturb));
    recs.push_back(selftest_residue("gamma_5(6) mod 25",
                                    gamma_p(BigRational(6), p5w), 24, perturb));
    recs.push_back(selftest_rational(
        "floor(-7a) for a=-1/3",
        BigRational(floor_neg_pa(make_rational(-1, 3u), 7)), "2", perturb));
    recs.push_back(selftest_rational(
        "floor(-5a) for a=-1/2",
        BigRational(floor_neg_pa(make_rational(-1, 2u), 5)), "2", perturb));
    recs.push_back(selftest_rational(
        "floor(-11a) for a=-1/6",
        BigRational(floor_neg_pa(make_rational(-1, 6u), 11)), "1", perturb));

    recs.push_back(selftest_rational(
        "poch(1/2, 3)", pochhammer(make_rational(1, 2u), 3), "15/8", perturb));
    recs.push_back(selftest_rational(
        "poch(5/9, 0)", pochhammer(make_rational(5, 9u), 0), "1", perturb));
    recs.push_back(selftest_rational(
        "poch(-2, 4)", pochhammer(BigRational(-2), 4), "0", perturb));
    recs.push_back(selftest_rational("3F2(a=1, 2 terms)",
                                     truncated_3f2(BigRational(1), 2), "0",
                                     perturb));
    recs.push_back(selftest_rational("3F2(a=9/7, 1 term)",
                                     truncated_3f2(make_rational(9, 7u), 1),
                                     "1", perturb));
    recs.push_back(selftest_rational("3F2(a=3, 4 terms)",
                                     truncated_3f2(BigRational(3), 4), "0",
                                     perturb));
    recs.push_back(selftest_residue(
        "3F2(-1/3, 5 terms) mod 25",
        truncated_3f2_mod(make_rational(-1, 3u), 5, p5w), 0, perturb));
    recs.push_back(selftest_residue(
        "3F2(5/3, 1 term) mod 49",
        truncated_3f2_mod(make_rational(5, 3u), 1, p7w), 1, perturb));
    recs.push_back(selftest_residue(
        "3F2(-1/2, 7 terms) mod 49",
        truncated_3f2_mod(make_rational(-1, 2u), 7, p7w), 0, perturb));
    recs.push_back(selftest_rational(
        "term(a=1, k=1)", term_binomial_form(BigRational(1), 1), "-1",
        perturb));
    recs.push_back(selftest_rational(
        "term(a=4/5, k=0)", term_binomial_form(make_rational(4, 5u), 0), "1",
        perturb));
    recs.push_back(selftest_rational(
        "term(a=-1/3, k=1)", term_binomial_form(make_rational(-1, 3u), 1),
        "1/9", perturb));

    recs.push_back(selftest_rational(
        "sum(3, 1)", weighted_sum(3, SumWeight::unit), "0", perturb));
    recs.push_back(selftest_rational(
        "sum(2, 1)", weighted_sum(2, SumWeight::unit), "1/4", perturb));
    recs.push_back(selftest_rational(
        "sum(2, H_k)", weighted_sum(2, SumWeight::harmonic_k), "3/8", perturb));
    recs.push_back(selftest_rational(
        "sum(2, H_2k)", weighted_sum(2, SumWeight::harmonic_2k), "3/16",
        perturb));
    recs.push_back(selftest_rational(
        "sum(2, tail)", weighted_sum(2, SumWeight::shifted_inverse_tail),
        "5/16", perturb));

    const CheckStatus pass = CheckStatus::pass;
    const CheckStatus skip = CheckStatus::skip;
    const BigRational half = make_rational(-1, 2u);
    const BigRational third = make_rational(-1, 3u);
    const BigRational quarter = make_rational(-1, 4u);
    const BigRational sixth = make_rational(-1, 6u);

    recs.push_back(selftest_status("nx(5,0,2)", check_nx(5, 0, 2, perturb), pass));
    recs.push_back(selftest_status("nx(5,1,1)", check_nx(5, 1, 1, perturb), pass));
    recs.push_back(selftest_status("nx(7,2,3)", check_nx(7, 2, 3, perturb), pass));
    recs.push_back(
        selftest_status("nb7(5,-1/3)", check_nb7(5, third, perturb), pass));
    recs.push_back(
        selftest_status("nb7(7,-1/2)", check_nb7(7, half, perturb), pass));
    recs.push_back(
        selftest_status("nb7(7,-1/3) skips", check_nb7(7, third), skip));
    recs.push_back(selftest_status(
        "nb10(5,-1/3,0)", check_block_theorem1(5, third, 0, perturb), pass));
    recs.push_back(selftest_status(
        "nb10(5,-1/3,1)", check_block_theorem1(5, third, 1, perturb), pass));
    recs.push_back(selftest_status(
        "nb10(11,3/5,2)",
        check_block_theorem1(11, make_rational(3, 5u), 2, perturb), pass));
    recs.push_back(selftest_status("nc1(7,-1/2,0,3)",
                                   check_nc1(7, half, 0, 3, perturb), pass));
    recs.push_back(selftest_status("nc1(7,-1/3,1,2)",
                                   check_nc1(7, third, 1, 2, perturb), pass));
    recs.push_back(selftest_status("nc1(11,-1/6,2,7)",
                                   check_nc1(11, sixth, 2, 7, perturb), pass));
    recs.push_back(
        selftest_status("nc6(7,-1/3)", check_nc6(7, third, perturb), pass));
    recs.push_back(
        selftest_status("nc6(5,-1/3)", check_nc6(5, third, perturb), pass));
    recs.push_back(
        selftest_status("nc6(11,-1/6)", check_nc6(11, sixth, perturb), pass));
    recs.push_back(
        selftest_status("nc14(7,-1/3)", check_nc14(7, third, perturb), pass));
    recs.push_back(
        selftest_status("nc14(13,-1/2)", check_nc14(13, half, perturb), pass));
    recs.push_back(
        selftest_status("nc14(11,-1/2) skips", check_nc14(11, half), skip));
    recs.push_back(selftest_status(
        "nc7(7,-1/3,0)", check_block_theorem2(7, third, 0, perturb), pass));
    recs.push_back(selftest_status(
        "nc7(7,-1/3,1)", check_block_theorem2(7, third, 1, perturb), pass));
    recs.push_back(selftest_status(
        "nc7(17,-1/4,2)", check_block_theorem2(17, quarter, 2, perturb), pass));
    recs.push_back(
        selftest_status("nb16(5,-1/3)", check_nb16(5, third, perturb), pass));
    recs.push_back(
        selftest_status("nc10(7,1,0)", check_nc10(7, 1, 0, perturb), pass));
    recs.push_back(
        selftest_status("nc18(7,-1/3)", check_nc18(7, third, perturb), pass));

    recs.push_back(
        selftest_status("na2(5,-1/3)", verify_na2(5, third, perturb), pass));
    recs.push_back(
        selftest_status("na2(7,-1/3)", verify_na2(7, third, perturb), pass));
    recs.push_back(selftest_status("na2(5,2)",
                                   verify_na2(5, BigRational(2), perturb),
                                   pass));
    recs.push_back(selftest_status(
        "thm1(5,-1/3,1)", verify_theorem1(5, third, 1, perturb), pass));
    recs.push_back(selftest_status(
        "thm1(5,-1/3,3)", verify_theorem1(5, third, 3, perturb), pass));
    recs.push_back(selftest_status(
        "thm1(11,7/4,2) skips", verify_theorem1(11, make_rational(7, 4u), 2),
        skip));
    recs.push_back(selftest_status(
        "thm2(7,-1/3,1)", verify_theorem2(7, third, 1, perturb), pass));
    recs.push_back(selftest_status(
        "thm2(7,-1/3,4)", verify_theorem2(7, third, 4, perturb), pass));
    recs.push_back(selftest_status(
        "thm2(13,-1/2,2)", verify_theorem2(13, half, 2, perturb), pass));
    recs.push_back(selftest_status(
        "corollary(7,-1/3,1)", verify_corollary(7, third, 1, perturb), pass));
    recs.push_back(selftest_status(
        "corollary(7,-1/3,2)", verify_corollary(7, third, 2, perturb), pass));
    recs.push_back(selftest_status(
        "corollary(17,-1/4,2)", verify_corollary(17, quarter, 2, perturb),
        pass));
    recs.push_back(selftest_status("odd identities n=1",
                                   detail::identity_record("nb1", 1, perturb),
                                   pass));
    recs.push_back(selftest_status("recurrence A n=1",
                                   detail::sequence_record("recA", 1, perturb),
                                   pass));
    recs.push_back(selftest_status("recurrence B n=1",
                                   detail::sequence_record("recB", 1, perturb),
                                   pass));

    Report report;
    report.version = version_string;
    report.config.checks = {"self-test"};
    report.config.perturb = perturb;
    report.records = std::move(recs);
    for (const CheckRecord& rec : report.records) {
        switch (rec.status) {
            case CheckStatus::pass: ++report.summary.pass; break;
            case CheckStatus::fail: ++report.summary.fail; break;
            case CheckStatus::skip: ++report.summary.skip; break;
            case CheckStatus::error: ++report.summary.error; break;
        }
    }
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
    return report;
}

} // namespace hypercong
