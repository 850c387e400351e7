#pragma once

#include <array>
#include <string>

#include "hypercong/errors.hpp"
#include "hypercong/rational.hpp"

namespace hypercong {

/// Weight factor multiplying C(2k,k)^2 C(n+k,2k) (-1/4)^k in the exact
/// closed-form identities.
enum class SumWeight {
    unit,                 // 1
    harmonic_k,           // H_k
    harmonic_2k,          // H_{2k}
    two_h2k_minus_3hk,    // 2H_{2k} - 3H_k
    two_hnk_minus_hk,     // 2H_{n+k} - H_k
    shifted_inverse_tail, // sum_{i=0}^{k-1} 1/(n+1+i)
};

inline const char* to_string(SumWeight w) {
    switch (w) {
        case SumWeight::unit: return "1";
        case SumWeight::harmonic_k: return "H_k";
        case SumWeight::harmonic_2k: return "H_2k";
        case SumWeight::two_h2k_minus_3hk: return "2H_2k-3H_k";
        case SumWeight::two_hnk_minus_hk: return "2H_(n+k)-H_k";
        case SumWeight::shifted_inverse_tail: return "tail(n)";
    }
    return "?";
}

/// Exact sum_{k=0}^{n} C(2k,k)^2 C(n+k,2k) (-1/4)^k w(k,n). Terms with
/// k > n vanish because C(n+k,2k) = 0, so the truncation at n is exact.
inline BigRational weighted_sum(unsigned long n, SumWeight w) {
    if (n < 1) {
        throw precondition_error("weighted_sum: n must be >= 1");
    }
    BigRational sum = 0;
    BigRational base = 1; // C(2k,k)^2 (-1/4)^k, updated incrementally
    BigRational h_k = 0, h_2k = 0, h_nk = harmonic_exact(n), tail = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        if (k > 0) {
            const BigInt j(k);
            base *= make_rational(-(2 * j - 1) * (2 * j - 1), j * j);
            h_k += BigRational(1, k);
            h_2k += BigRational(1, 2 * k - 1) + BigRational(1, 2 * k);
            h_nk += BigRational(1, n + k);
            tail += BigRational(1, n + k); // i = k-1 contributes 1/(n+1+i)
        }
        BigRational weight;
        switch (w) {
            case SumWeight::unit: weight = 1; break;
            case SumWeight::harmonic_k: weight = h_k; break;
            case SumWeight::harmonic_2k: weight = h_2k; break;
            case SumWeight::two_h2k_minus_3hk: weight = 2 * h_2k - 3 * h_k; break;
            case SumWeight::two_hnk_minus_hk: weight = 2 * h_nk - h_k; break;
            case SumWeight::shifted_inverse_tail: weight = tail; break;
        }
        sum += base * BigRational(binomial(n + k, 2 * k)) * weight;
    }
    return sum;
}

/// One evaluated weighted sum, recomputable on demand.
struct WeightedSum {
    unsigned long n;
    SumWeight weight;
    BigRational value;
};

inline WeightedSum make_weighted_sum(unsigned long n, SumWeight w) {
    return WeightedSum{n, w, weighted_sum(n, w)};
}

/// The three odd-index vanishing identities.
struct OddIdentityReport {
    unsigned long n;
    bool plain_vanishes;
    bool h2k_hk_vanishes;
    bool hnk_hk_vanishes;
    bool all() const { return plain_vanishes && h2k_hk_vanishes && hnk_hk_vanishes; }
};

inline OddIdentityReport check_odd_identities(unsigned long n) {
    if (n % 2 == 0) {
        throw precondition_error("check_odd_identities: n must be odd");
    }
    return OddIdentityReport{
        n,
        sgn(weighted_sum(n, SumWeight::unit)) == 0,
        sgn(weighted_sum(n, SumWeight::two_h2k_minus_3hk)) == 0,
        sgn(weighted_sum(n, SumWeight::two_hnk_minus_hk)) == 0,
    };
}

/// The four even-index closed forms, all checked exactly against
/// C(n,n/2)^2/4^n times the stated harmonic combinations.
struct EvenIdentityReport {
    unsigned long n;
    bool plain_matches;
    bool hk_matches;
    bool h2k_matches;
    bool tail_matches;
    bool all() const {
        return plain_matches && hk_matches && h2k_matches && tail_matches;
    }
};

inline EvenIdentityReport check_even_identities(unsigned long n) {
    if (n % 2 != 0 || n < 2) {
        throw precondition_error("check_even_identities: n must be even, >= 2");
    }
    const BigRational central(binomial(n, n / 2));
    const BigRational lead =
        central * central / BigRational(pow_integer(BigInt(4), n));
    const BigRational h_n = harmonic_exact(n);
    const BigRational h_half = harmonic_exact(n / 2);
    return EvenIdentityReport{
        n,
        weighted_sum(n, SumWeight::unit) == lead,
        weighted_sum(n, SumWeight::harmonic_k) == lead * h_n,
        weighted_sum(n, SumWeight::harmonic_2k) == lead * h_n / 2,
        weighted_sum(n, SumWeight::shifted_inverse_tail) ==
            lead * (make_rational(3, 2u) * h_n - h_half),
    };
}

enum class SequenceName { A, B };

inline const char* to_string(SequenceName s) {
    return s == SequenceName::A ? "A" : "B";
}

/// A_n and B_n: the weighted sums at odd index 2n-1 whose vanishing is
/// certified through their holonomic recurrences.
inline BigRational sequence_value(SequenceName name, unsigned long n) {
    if (n < 1) {
        throw precondition_error("sequence_value: n must be >= 1");
    }
    const SumWeight w = name == SequenceName::A ? SumWeight::two_h2k_minus_3hk
                                                : SumWeight::two_hnk_minus_hk;
    return weighted_sum(2 * n - 1, w);
}

/// Three consecutive sequence values and the exact residual of the
/// stated three-term recurrence at index n.
struct RecurrenceWitness {
    SequenceName name;
    unsigned long n;
    std::array<BigRational, 3> terms;
    BigRational residual;
};

inline RecurrenceWitness recurrence_residual(SequenceName name,
                                             unsigned long n) {
    const BigRational t0 = sequence_value(name, n);
    const BigRational t1 = sequence_value(name, n + 1);
    const BigRational t2 = sequence_value(name, n + 2);
    const BigInt m(n);
    BigRational residual;
    if (name == SequenceName::A) {
        residual = BigRational(16 * m * m * m * (m + 1) * (4 * m + 5)) * t0 -
                   BigRational(4 * (m + 1) * (2 * m + 1) * (4 * m + 3) *
                               (4 * m * m + 6 * m + 1)) *
                       t1 +
                   BigRational((2 * m + 1) * pow_integer(2 * m + 3, 3) *
                               (4 * m + 1)) *
                       t2;
    } else {
        residual = BigRational(16 * m * m * m * (m + 1)) * t0 -
                   BigRational(4 * (m + 1) * pow_integer(2 * m + 1, 3)) * t1 +
                   BigRational(pow_integer(2 * m + 1, 2) *
                               pow_integer(2 * m + 3, 2)) *
                       t2;
    }
    return RecurrenceWitness{name, n, {t0, t1, t2}, residual};
}

} // namespace hypercong
