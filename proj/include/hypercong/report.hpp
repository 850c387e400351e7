#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hypercong/checks.hpp"
#include "hypercong/record.hpp"

namespace hypercong {

inline constexpr char version_string[] = "1.0.0";

/// A grid run: prime window, precision, parameter set, n/r window,
/// selected checks, output destination and worker count.
struct RunConfig {
    unsigned long prime_min = 5;
    unsigned long prime_max = 31;
    unsigned precision = 2;
    std::string a_set = "special4"; // "special4" | "grid-default" | list
    long n_min = 1;
    long n_max = 3;
    std::vector<std::string> checks = {"all"};
    std::string output_path;
    unsigned long jobs = 0; // 0 = one worker per hardware thread
    bool perturb = false;
};

struct ReportSummary {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t skip = 0;
    std::uint64_t error = 0;
};

struct Report {
    std::string version;
    RunConfig config;
    std::vector<CheckRecord> records;
    ReportSummary summary;
    std::int64_t wall_time_ms = 0;
};

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// Parses "A:B" (or a single "A") into an inclusive range.
template <typename T>
inline std::pair<T, T> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const long long v = std::stoll(text);
            return {static_cast<T>(v), static_cast<T>(v)};
        }
        const long long lo = std::stoll(text.substr(0, colon));
        const long long hi = std::stoll(text.substr(colon + 1));
        return {static_cast<T>(lo), static_cast<T>(hi)};
    } catch (const std::exception&) {
        throw config_error("cannot parse range '" + text + "'");
    }
}

/// Parameter values selected by the configuration for one prime.
inline std::vector<BigRational> resolve_a_set(const RunConfig& cfg,
                                              unsigned long p) {
    if (cfg.a_set == "special4") {
        return {make_rational(-1, 2u), make_rational(-1, 3u),
                make_rational(-1, 4u), make_rational(-1, 6u)};
    }
    if (cfg.a_set == "grid-default") {
        return default_a_grid(p);
    }
    std::vector<BigRational> out;
    for (const std::string& token : split_list(cfg.a_set)) {
        try {
            out.push_back(parse_rational(token));
        } catch (const error&) {
            throw config_error("cannot parse parameter value '" + token + "'");
        }
    }
    if (out.empty()) {
        throw config_error("empty parameter list");
    }
    return out;
}

inline std::vector<std::string> resolve_checks(const RunConfig& cfg) {
    std::vector<std::string> ids;
    for (const std::string& c : cfg.checks) {
        if (c == "all") {
            for (const CheckInfo& info : check_catalog()) ids.push_back(info.id);
        } else if (find_check(c) != nullptr) {
            ids.push_back(c);
        } else {
            throw config_error("unknown check id '" + c + "'");
        }
    }
    if (ids.empty()) {
        throw config_error("no checks selected");
    }
    return ids;
}

inline void validate_config(const RunConfig& cfg) {
    if (cfg.prime_min < 5) {
        throw config_error("prime_min must be >= 5, got " +
                           std::to_string(cfg.prime_min));
    }
    if (cfg.prime_min > cfg.prime_max) {
        throw config_error("empty prime range");
    }
    if (cfg.n_min > cfg.n_max) {
        throw config_error("empty n range");
    }
    if (cfg.precision < 1 || cfg.precision > 8) {
        throw config_error("precision must be in [1, 8]");
    }
    resolve_checks(cfg);
    resolve_a_set(cfg, cfg.prime_min <= 5 ? 7 : cfg.prime_min);
}

namespace detail {

/// Parameter-level preconditions used to collapse whole skipped
/// (p, a) families into a single record during grid expansion. The notes
/// match the ones the checkers themselves produce.
inline std::optional<std::string> a_skip_reason(const std::string& id,
                                                unsigned long p,
                                                const BigRational& a) {
    const bool need_special =
        id == "nc1" || id == "nc12" || id == "nc13" || id == "nc14" ||
        id == "nc15" || id == "nc19" || id == "nc7" || id == "thm2" ||
        id == "corollary";
    const int parity = // -1 none, 0 even, 1 odd
        (id == "nb7" || id == "nb10" || id == "nb15" || id == "nb16" ||
         id == "nb17" || id == "thm1")
            ? 1
            : (id == "nc14" || id == "nc15" || id == "nc16" || id == "nc17" ||
               id == "nc18" || id == "nc19" || id == "nc7" || id == "thm2" ||
               id == "corollary")
                  ? 0
                  : -1;
    if (!denominator_ok(a, p)) return denominator_note(a, p);
    if (need_special && !is_special4(a)) return special4_note(a);
    if (parity >= 0) {
        const unsigned long ra = least_residue(a, p);
        if (static_cast<int>(ra % 2 == 0 ? 0 : 1) != parity) {
            return parity_note(ra, parity == 0);
        }
    }
    if (id == "nb7" && denominator(a) == 1) {
        return integer_parameter_note(a);
    }
    if (id == "nb15" || id == "nb17" || id == "nc15" || id == "nc17") {
        const unsigned long ra = least_residue(a, p);
        if (ra < (p - 1) / 2) return low_residue_note(ra, p);
    }
    return std::nullopt;
}

struct GridCase {
    CheckRecord proto; // identifies the case if the runner has to bail out
    std::function<CheckRecord()> run;
};

inline void push_case(std::vector<GridCase>& tasks, CheckRecord proto,
                      std::function<CheckRecord()> fn) {
    tasks.push_back(GridCase{std::move(proto), std::move(fn)});
}

inline bool record_less(const CheckRecord& x, const CheckRecord& y) {
    if (x.id != y.id) return x.id < y.id;
    if (x.p != y.p) return x.p < y.p;
    if (x.a.has_value() != y.a.has_value()) return y.a.has_value();
    if (x.a && y.a && *x.a != *y.a) return *x.a < *y.a;
    const auto opt_less = [](const std::optional<long>& u,
                             const std::optional<long>& v) -> int {
        if (u.has_value() != v.has_value()) return v.has_value() ? -1 : 1;
        if (!u) return 0;
        return *u < *v ? -1 : (*u > *v ? 1 : 0);
    };
    if (int c = opt_less(x.n, y.n)) return c < 0;
    if (int c = opt_less(x.r, y.r)) return c < 0;
    if (int c = opt_less(x.k, y.k)) return c < 0;
    return false;
}

} // namespace detail

/// Expands the configured grid into individual cases. The expansion is
/// deterministic; precondition failures that depend only on (p, a) are
/// collapsed into one skip record per family.
inline std::vector<detail::GridCase> build_grid(const RunConfig& cfg) {
    std::vector<detail::GridCase> tasks;
    const bool perturb = cfg.perturb;
    const auto ids = resolve_checks(cfg);

    std::vector<unsigned long> primes;
    for (unsigned long p = cfg.prime_min; p <= cfg.prime_max; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }

    for (const std::string& id : ids) {
        const CheckInfo& info = *find_check(id);
        const BigRational zero(0);
        switch (info.shape) {
            case ParamShape::prime_only:
                for (unsigned long p : primes) {
                    detail::push_case(
                        tasks, CheckRecord{.id = id, .paper_label = info.label, .p = p},
                        [id, p, perturb] {
                            return run_check_case(id, p, BigRational(0), 0, 0,
                                                  perturb);
                        });
                }
                break;
            case ParamShape::prime_a:
                for (unsigned long p : primes) {
                    for (const BigRational& a : resolve_a_set(cfg, p)) {
                        detail::push_case(
                            tasks,
                            CheckRecord{.id = id, .paper_label = info.label,
                                        .p = p, .a = a},
                            [id, p, a, perturb] {
                                return run_check_case(id, p, a, 0, 0, perturb);
                            });
                    }
                }
                break;
            case ParamShape::prime_a_n:
            case ParamShape::prime_a_r:
                for (unsigned long p : primes) {
                    for (const BigRational& a : resolve_a_set(cfg, p)) {
                        CheckRecord proto{.id = id, .paper_label = info.label,
                                          .p = p, .a = a};
                        if (auto why = detail::a_skip_reason(id, p, a)) {
                            detail::push_case(tasks, proto,
                                              [proto, why] {
                                                  return skip_record(proto, *why);
                                              });
                            continue;
                        }
                        for (long v = cfg.n_min; v <= cfg.n_max; ++v) {
                            CheckRecord vp = proto;
                            (info.shape == ParamShape::prime_a_n ? vp.n : vp.r) = v;
                            detail::push_case(
                                tasks, vp, [id, p, a, v, perturb] {
                                    return run_check_case(id, p, a, v, 0,
                                                          perturb);
                                });
                        }
                    }
                }
                break;
            case ParamShape::prime_r_k:
                for (unsigned long p : primes) {
                    for (long r = cfg.n_min; r <= cfg.n_max; ++r) {
                        if (r < 0) continue;
                        const long kmax = max_k_for(id, p, zero);
                        for (long k = 0; k <= kmax; ++k) {
                            detail::push_case(
                                tasks,
                                CheckRecord{.id = id, .paper_label = info.label,
                                            .p = p, .r = r, .k = k},
                                [id, p, r, k, perturb] {
                                    return run_check_case(id, p, BigRational(0),
                                                          r, k, perturb);
                                });
                        }
                    }
                }
                break;
            case ParamShape::prime_a_r_k:
                for (unsigned long p : primes) {
                    for (const BigRational& a : resolve_a_set(cfg, p)) {
                        CheckRecord proto{.id = id, .paper_label = info.label,
                                          .p = p, .a = a};
                        if (auto why = detail::a_skip_reason(id, p, a)) {
                            detail::push_case(tasks, proto,
                                              [proto, why] {
                                                  return skip_record(proto, *why);
                                              });
                            continue;
                        }
                        const long kmax = max_k_for(id, p, a);
                        for (long r = cfg.n_min; r <= cfg.n_max; ++r) {
                            if (r < 0) continue;
                            for (long k = 0; k <= kmax; ++k) {
                                CheckRecord vp = proto;
                                vp.r = r;
                                vp.k = k;
                                detail::push_case(
                                    tasks, vp, [id, p, a, r, k, perturb] {
                                        return run_check_case(id, p, a, r, k,
                                                              perturb);
                                    });
                            }
                        }
                    }
                }
                break;
            case ParamShape::odd_n:
            case ParamShape::even_n:
            case ParamShape::sequence_n: {
                const long parity_lo =
                    info.shape == ParamShape::even_n ? 2 : 1;
                for (long n = std::max(cfg.n_min, parity_lo); n <= cfg.n_max;
                     ++n) {
                    if (info.shape == ParamShape::odd_n && n % 2 == 0) continue;
                    if (info.shape == ParamShape::even_n && n % 2 != 0) continue;
                    detail::push_case(
                        tasks,
                        CheckRecord{.id = id, .paper_label = info.label, .n = n},
                        [id, n, perturb] {
                            return run_check_case(id, 0, BigRational(0), n, 0,
                                                  perturb);
                        });
                }
                break;
            }
            case ParamShape::witness_search: {
                const unsigned long pmax = cfg.prime_max;
                const long nmax = cfg.n_max;
                detail::push_case(
                    tasks, CheckRecord{.id = id, .paper_label = info.label},
                    [pmax, nmax] { return na5_sharpness_search(pmax, nmax); });
                break;
            }
        }
    }
    return tasks;
}

/// Runs every case of the configured grid, in parallel when requested,
/// and assembles a deterministic, sorted report.
inline Report run_grid(const RunConfig& cfg) {
    validate_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<detail::GridCase> tasks = build_grid(cfg);

    std::vector<CheckRecord> records(tasks.size());
    unsigned long jobs = cfg.jobs != 0
                             ? cfg.jobs
                             : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned long>(jobs, tasks.size());

    const auto worker = [&](std::atomic<std::size_t>& next) {
        for (std::size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1)) {
            try {
                records[i] = tasks[i].run();
            } catch (const std::exception& e) {
                records[i] = tasks[i].proto;
                records[i].status = CheckStatus::error;
                records[i].note = e.what();
            }
        }
    };

    std::atomic<std::size_t> next{0};
    if (jobs <= 1) {
        worker(next);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned long t = 0; t < jobs; ++t) {
            pool.emplace_back([&] { worker(next); });
        }
        for (std::thread& t : pool) t.join();
    }

    std::sort(records.begin(), records.end(), detail::record_less);

    Report report;
    report.version = version_string;
    report.config = cfg;
    report.records = std::move(records);
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

inline nlohmann::ordered_json to_json(const CheckRecord& rec) {
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    j["paper_label"] = rec.paper_label;
    j["p"] = rec.p != 0 ? nlohmann::ordered_json(rec.p)
                        : nlohmann::ordered_json(nullptr);
    j["a"] = rec.a ? nlohmann::ordered_json(rec.a->get_str())
                   : nlohmann::ordered_json(nullptr);
    j["n"] = rec.n ? nlohmann::ordered_json(*rec.n)
                   : nlohmann::ordered_json(nullptr);
    j["r"] = rec.r ? nlohmann::ordered_json(*rec.r)
                   : nlohmann::ordered_json(nullptr);
    j["k"] = rec.k ? nlohmann::ordered_json(*rec.k)
                   : nlohmann::ordered_json(nullptr);
    j["branch"] = rec.branch.empty() ? nlohmann::ordered_json(nullptr)
                                     : nlohmann::ordered_json(rec.branch);
    j["lhs"] = rec.lhs.empty() ? nlohmann::ordered_json(nullptr)
                               : nlohmann::ordered_json(rec.lhs);
    j["rhs"] = rec.rhs.empty() ? nlohmann::ordered_json(nullptr)
                               : nlohmann::ordered_json(rec.rhs);
    j["modulus"] = rec.modulus.empty() ? nlohmann::ordered_json(nullptr)
                                       : nlohmann::ordered_json(rec.modulus);
    j["status"] = to_string(rec.status);
    j["note"] = rec.note;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["version"] = report.version;
    nlohmann::ordered_json cfg;
    cfg["prime_min"] = report.config.prime_min;
    cfg["prime_max"] = report.config.prime_max;
    cfg["prec"] = report.config.precision;
    cfg["a"] = report.config.a_set;
    cfg["n_min"] = report.config.n_min;
    cfg["n_max"] = report.config.n_max;
    cfg["checks"] = report.config.checks;
    cfg["out"] = report.config.output_path;
    cfg["jobs"] = report.config.jobs;
    cfg["self_test_perturb"] = report.config.perturb;
    j["config"] = cfg;
    j["records"] = nlohmann::ordered_json::array();
    for (const CheckRecord& rec : report.records) {
        j["records"].push_back(to_json(rec));
    }
    nlohmann::ordered_json summary;
    summary["pass"] = report.summary.pass;
    summary["fail"] = report.summary.fail;
    summary["skip"] = report.summary.skip;
    summary["error"] = report.summary.error;
    j["summary"] = summary;
    j["wall_time_ms"] = report.wall_time_ms;
    return j;
}

/// Writes the report as a single JSON document.
inline void emit_report(const Report& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    out << to_json(report).dump(2) << '\n';
    if (!out) {
        throw io_error("failed writing report to '" + path + "'");
    }
}

} // namespace hypercong
