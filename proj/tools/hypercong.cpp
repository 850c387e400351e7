#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercong/report.hpp"
#include "hypercong/selftest.hpp"

namespace {

using namespace hypercong;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;  // at least one mathematical failure or error
constexpr int kExitUsage = 2; // configuration or I/O problem

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot read config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("config file '" + path + "': " + e.what());
    }
    if (j.contains("primes")) {
        const auto range = parse_range<long long>(j["primes"].get<std::string>());
        if (range.first < 0 || range.second < 0) {
            throw config_error("prime range must be non-negative");
        }
        cfg.prime_min = static_cast<unsigned long>(range.first);
        cfg.prime_max = static_cast<unsigned long>(range.second);
    }
    if (j.contains("a")) cfg.a_set = j["a"].get<std::string>();
    if (j.contains("n")) {
        const auto range = parse_range<long>(j["n"].get<std::string>());
        cfg.n_min = range.first;
        cfg.n_max = range.second;
    }
    if (j.contains("prec")) cfg.precision = j["prec"].get<unsigned>();
    if (j.contains("checks")) {
        if (j["checks"].is_array()) {
            cfg.checks = j["checks"].get<std::vector<std::string>>();
        } else {
            cfg.checks = split_list(j["checks"].get<std::string>());
        }
    }
    if (j.contains("out")) cfg.output_path = j["out"].get<std::string>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<unsigned long>();
    if (j.contains("self_test_perturb")) {
        cfg.perturb = j["self_test_perturb"].get<bool>();
    }
}

int finish_run(const Report& report) {
    if (!report.config.output_path.empty()) {
        emit_report(report, report.config.output_path);
    }
    for (const CheckRecord& rec : report.records) {
        if (rec.status == CheckStatus::fail || rec.status == CheckStatus::error) {
            std::cout << to_string(rec.status) << "  " << rec.id;
            if (rec.p != 0) std::cout << "  p=" << rec.p;
            if (rec.a) std::cout << "  a=" << rec.a->get_str();
            if (rec.n) std::cout << "  n=" << *rec.n;
            if (rec.r) std::cout << "  r=" << *rec.r;
            if (rec.k) std::cout << "  k=" << *rec.k;
            if (!rec.lhs.empty()) {
                std::cout << "  lhs=" << rec.lhs << "  rhs=" << rec.rhs;
            }
            if (!rec.note.empty()) std::cout << "  (" << rec.note << ")";
            std::cout << "\n";
        }
    }
    std::cout << "pass " << report.summary.pass << ", fail "
              << report.summary.fail << ", skip " << report.summary.skip
              << ", error " << report.summary.error << " ("
              << report.wall_time_ms << " ms)\n";
    return (report.summary.fail == 0 && report.summary.error == 0) ? kExitPass
                                                                   : kExitFail;
}

struct EvalOptions {
    std::string x;
    std::string a;
    unsigned long p = 0;
    unsigned precision = 2;
    unsigned long n = 0;
    long m = 0;
    unsigned long terms = 1;
    bool exact = false;
};

int run_eval(const std::string& what, const EvalOptions& opt) {
    if (what == "gamma-p") {
        if (opt.x.empty() || opt.p == 0) {
            throw config_error("eval gamma-p needs --x and --p");
        }
        const PadicContext ctx(opt.p, opt.precision);
        std::cout << gamma_p(parse_rational(opt.x), ctx).str() << "\n";
        return kExitPass;
    }
    if (what == "3f2") {
        if (opt.a.empty()) {
            throw config_error("eval 3f2 needs --a (and --terms)");
        }
        const BigRational a = parse_rational(opt.a);
        if (opt.exact || opt.p == 0) {
            std::cout << truncated_3f2(a, opt.terms).get_str() << "\n";
        } else {
            const PadicContext ctx(opt.p, opt.precision);
            std::cout << truncated_3f2_mod(a, opt.terms, ctx).str() << "\n";
        }
        return kExitPass;
    }
    if (what == "harmonic") {
        if (opt.p == 0 || opt.exact) {
            std::cout << harmonic_exact(opt.n).get_str() << "\n";
        } else {
            const PadicContext ctx(opt.p, opt.precision);
            std::cout << harmonic_mod(opt.n, ctx).str() << "\n";
        }
        return kExitPass;
    }
    if (what == "binomial") {
        if (opt.x.empty()) {
            throw config_error("eval binomial needs --x and --m");
        }
        std::cout << rational_binomial(parse_rational(opt.x), opt.m).get_str()
                  << "\n";
        return kExitPass;
    }
    throw config_error("unknown eval target '" + what +
                       "' (expected gamma-p, 3f2, harmonic or binomial)");
}

const char* shape_params(ParamShape shape) {
    switch (shape) {
        case ParamShape::prime_only: return "p";
        case ParamShape::prime_a: return "p, a";
        case ParamShape::prime_a_n: return "p, a, n";
        case ParamShape::prime_a_r: return "p, a, r";
        case ParamShape::prime_r_k: return "p, r, k";
        case ParamShape::prime_a_r_k: return "p, a, r, k";
        case ParamShape::odd_n: return "odd n";
        case ParamShape::even_n: return "even n";
        case ParamShape::sequence_n: return "n";
        case ParamShape::witness_search: return "grid search";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercong: exact verification of truncated 3F2 "
                 "supercongruences, p-adic Gamma evaluations and the "
                 "supporting combinatorial identities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification grid");
    std::string config_path, primes_opt, a_opt, n_opt, checks_opt, out_opt;
    unsigned prec_opt = 0;
    long jobs_opt = -1;
    bool perturb_opt = false;
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--primes", primes_opt, "prime range A:B (default 5:31)");
    verify->add_option("--a", a_opt,
                       "parameter set: special4, grid-default, or a comma "
                       "list of rationals");
    verify->add_option("--n", n_opt, "n (or r) range A:B (default 1:3)");
    verify->add_option("--prec", prec_opt, "precision exponent for eval paths");
    verify->add_option("--checks", checks_opt,
                       "comma list of check ids, or 'all'");
    verify->add_option("--out", out_opt, "write the JSON report here");
    verify->add_option("--jobs", jobs_opt, "worker count (default: auto)");
    verify->add_flag("--self-test-perturb", perturb_opt,
                     "negative control: offset every right side by one");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a single expression");
    std::string eval_what;
    EvalOptions eval_opt;
    eval->add_option("what", eval_what, "gamma-p | 3f2 | harmonic | binomial")
        ->required();
    eval->add_option("--x", eval_opt.x, "rational argument");
    eval->add_option("--a", eval_opt.a, "3F2 parameter a");
    eval->add_option("--p", eval_opt.p, "prime modulus base");
    eval->add_option("--prec", eval_opt.precision, "precision exponent");
    eval->add_option("--n", eval_opt.n, "harmonic index");
    eval->add_option("--m", eval_opt.m, "binomial lower index");
    eval->add_option("--terms", eval_opt.terms, "3F2 truncation length");
    eval->add_flag("--exact", eval_opt.exact, "force the exact rational path");

    // list-checks
    auto* list = app.add_subcommand("list-checks", "enumerate check ids");

    // self-test
    auto* selftest =
        app.add_subcommand("self-test", "run the built-in example corpus");
    bool selftest_perturb = false;
    std::string selftest_out;
    selftest->add_flag("--self-test-perturb", selftest_perturb,
                       "negative control: offset expected values by one");
    selftest->add_option("--out", selftest_out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            RunConfig cfg;
            if (!config_path.empty()) load_config_file(config_path, cfg);
            if (verify->count("--primes")) {
                const auto range = parse_range<long long>(primes_opt);
                if (range.first < 0 || range.second < 0) {
                    throw config_error("prime range must be non-negative");
                }
                cfg.prime_min = static_cast<unsigned long>(range.first);
                cfg.prime_max = static_cast<unsigned long>(range.second);
            }
            if (verify->count("--a")) cfg.a_set = a_opt;
            if (verify->count("--n")) {
                const auto range = parse_range<long>(n_opt);
                cfg.n_min = range.first;
                cfg.n_max = range.second;
            }
            if (verify->count("--prec")) cfg.precision = prec_opt;
            if (verify->count("--checks")) cfg.checks = split_list(checks_opt);
            if (verify->count("--out")) cfg.output_path = out_opt;
            if (verify->count("--jobs")) {
                if (jobs_opt < 0) throw config_error("jobs must be >= 0");
                cfg.jobs = static_cast<unsigned long>(jobs_opt);
            }
            if (verify->count("--self-test-perturb")) cfg.perturb = true;
            return finish_run(run_grid(cfg));
        }
        if (eval->parsed()) {
            return run_eval(eval_what, eval_opt);
        }
        if (list->parsed()) {
            std::printf("%-14s %-22s %-14s %s\n", "id", "label", "parameters",
                        "description");
            for (const CheckInfo& info : check_catalog()) {
                std::printf("%-14s %-22s %-14s %s\n", info.id.c_str(),
                            info.label.c_str(), shape_params(info.shape),
                            info.summary.c_str());
            }
            return kExitPass;
        }
        if (selftest->parsed()) {
            Report report = self_test(selftest_perturb);
            report.config.output_path = selftest_out;
            return finish_run(report);
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
