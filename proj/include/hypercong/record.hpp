#pragma once

#include <optional>
#include <string>

#include "hypercong/rational.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

enum class CheckStatus { pass, fail, skip, error };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
        case CheckStatus::error: return "error";
    }
    return "?";
}

/// One verification outcome: which check, on which parameters, the two
/// sides as rendered strings, the modulus, and the resulting status.
struct CheckRecord {
    std::string id;
    std::string paper_label;
    unsigned long p = 0; // 0 when the check does not involve a prime
    std::optional<BigRational> a;
    std::optional<long> n;
    std::optional<long> r;
    std::optional<long> k;
    std::string branch; // "odd"/"even" for parity-split results
    std::string lhs;
    std::string rhs;
    std::string modulus; // decimal p^e, or "exact"
    CheckStatus status = CheckStatus::error;
    std::string note;

    bool passed() const { return status == CheckStatus::pass; }
};

/// Residue equality with an optional +1 perturbation of the right side,
/// used by the negative-control mode to prove the comparisons are live.
inline bool residues_match(const Residue& lhs, const Residue& rhs,
                           bool perturb) {
    if (!perturb) return lhs == rhs;
    return lhs == rhs + Residue(1, rhs.context());
}

inline bool exact_match(const BigRational& lhs, const BigRational& rhs,
                        bool perturb) {
    return perturb ? (lhs == rhs + 1) : (lhs == rhs);
}

/// Fills lhs/rhs/modulus/status from a residue comparison.
inline void finish_residue_check(CheckRecord& rec, const Residue& lhs,
                                 const Residue& rhs, bool perturb) {
    rec.lhs = lhs.str();
    rec.rhs = rhs.str();
    rec.modulus = lhs.context().modulus().get_str();
    rec.status = residues_match(lhs, rhs, perturb) ? CheckStatus::pass
                                                   : CheckStatus::fail;
}

/// Fills lhs/rhs/status from an exact rational comparison.
inline void finish_exact_check(CheckRecord& rec, const BigRational& lhs,
                               const BigRational& rhs, bool perturb) {
    rec.lhs = lhs.get_str();
    rec.rhs = rhs.get_str();
    rec.modulus = "exact";
    rec.status = exact_match(lhs, rhs, perturb) ? CheckStatus::pass
                                                : CheckStatus::fail;
}

inline CheckRecord skip_record(CheckRecord rec, const std::string& why) {
    rec.status = CheckStatus::skip;
    rec.note = why;
    return rec;
}

} // namespace hypercong
