#include "carat/finite_oracle.hpp"
#include "carat/laws.hpp"
#include "carat/set_dsl.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitFalsified = 3;

struct Options {
    std::string eps_text = "1/1024";
    int trials = 500;
    std::uint64_t seed = 0;
    std::string format = "human";
};

carat::Rat parse_eps_or_exit(const std::string& text) {
    auto eps = carat::Rat::parse(text);
    if (!eps || *eps <= carat::Rat(0)) {
        std::cerr << "error: eps must be a positive rational, got \"" << text << "\"\n";
        std::exit(kExitPrecondition);
    }
    return *eps;
}

carat::MeasurableSet eval_or_exit(const std::string& text) {
    try {
        return carat::eval_expr(carat::parse(text));
    } catch (const carat::ParseError& err) {
        std::cerr << "error: " << err.message() << " at byte " << err.position() << "\n";
        std::exit(kExitParseError);
    }
}

void print_interval(const carat::ErrorInterval& interval, const std::string& format,
                    const std::string& label) {
    if (format == "machine") {
        std::cout << interval.lo.to_string() << ' ' << interval.hi.to_string() << '\n';
    } else {
        std::cout << label << " in [" << interval.lo.to_string() << ", "
                  << interval.hi.to_string() << "], width "
                  << interval.width().to_string() << '\n';
    }
}

int run_measure(const std::string& expr_text, const Options& opt) {
    carat::Rat eps = parse_eps_or_exit(opt.eps_text);
    auto set = eval_or_exit(expr_text);
    print_interval(carat::measure_with_error(set, eps), opt.format, "measure");
    return kExitOk;
}

int run_dist(const std::string& expr_a, const std::string& expr_b, const Options& opt) {
    carat::Rat eps = parse_eps_or_exit(opt.eps_text);
    auto a = eval_or_exit(expr_a);
    auto b = eval_or_exit(expr_b);
    print_interval(carat::distance_between(a, b, eps), opt.format, "distance");
    return kExitOk;
}

int run_approx(const std::string& expr_text, const Options& opt) {
    carat::Rat eps = parse_eps_or_exit(opt.eps_text);
    auto set = eval_or_exit(expr_text);
    std::cout << set.approx(eps).to_string() << '\n';
    return kExitOk;
}

int run_laws(const Options& opt) {
    if (opt.trials < 1) {
        std::cerr << "error: trials must be >= 1\n";
        return kExitPrecondition;
    }
    auto result = carat::run_laws(opt.trials, opt.seed);
    for (const auto& law : result.laws) {
        std::cout << "law " << law.name << ": " << law.trials << " trials, "
                  << law.failures << " failures\n";
        if (law.failures > 0) {
            std::cout << "  counterexample: " << law.counterexample << '\n';
        }
    }
    if (!result.all_passed()) {
        std::cout << "FALSIFIED\n";
        return kExitFalsified;
    }
    std::cout << "all laws hold\n";
    return kExitOk;
}

bool report_space(const carat::FiniteSpace& space, long space_id, const std::string& format) {
    bool thm2 = carat::verify_theorem2(space);
    bool ext = carat::verify_extension(space);
    bool ok = thm2 && ext;
    if (format == "machine") {
        std::cout << space_id << ' ' << (ok ? "ok" : "fail") << '\n';
    } else {
        auto closure = carat::limit_closure(space);
        std::size_t algebra_size = space.algebra_masks().size();
        std::cout << "space " << space_id << " (" << space.describe() << "): "
                  << (thm2 ? "theorem2 ok" : "theorem2 FAIL") << ", "
                  << (ext ? "extension ok" : "extension FAIL") << ", closure "
                  << closure.size() << " sets (" << closure.size() - algebra_size
                  << " beyond the algebra)\n";
    }
    return ok;
}

int run_oracle(const std::string& spec, int random_universe, int random_trials,
               const Options& opt) {
    bool all_ok = true;
    if (random_trials > 0) {
        if (random_universe < 2 || random_universe > 8) {
            std::cerr << "error: random universe size must be in [2, 8]\n";
            return kExitParseError;
        }
        std::mt19937_64 rng(opt.seed);
        for (int trial = 0; trial < random_trials; ++trial) {
            auto space = carat::FiniteSpace::random_space(rng, random_universe);
            all_ok = report_space(space, trial, opt.format) && all_ok;
        }
    } else {
        std::optional<carat::FiniteSpace> space;
        try {
            space = carat::FiniteSpace::parse_spec(spec);
        } catch (const std::invalid_argument& err) {
            std::cerr << "error: " << err.what() << '\n';
            return kExitParseError;
        }
        all_ok = report_space(*space, 0, opt.format);
    }
    return all_ok ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive measure extension: certified evaluation over [0,1)"};
    app.require_subcommand(1);

    Options opt;
    std::string expr_a, expr_b, partition_spec;
    std::vector<std::string> random_args;

    auto add_eps = [&](CLI::App* cmd) { cmd->add_option("--eps", opt.eps_text, "precision, p/q > 0"); };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "human|machine")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    auto* measure = app.add_subcommand("measure", "certified measure of a set expression");
    measure->add_option("expr", expr_a, "set expression")->required();
    add_eps(measure);
    add_format(measure);

    auto* dist = app.add_subcommand("dist", "certified distance between two set expressions");
    dist->add_option("exprA", expr_a)->required();
    dist->add_option("exprB", expr_b)->required();
    add_eps(dist);
    add_format(dist);

    auto* approx = app.add_subcommand("approx", "print the eps-approximant of an expression");
    approx->add_option("expr", expr_a)->required();
    add_eps(approx);

    auto* laws = app.add_subcommand("laws", "run the exact randomized law suite");
    laws->add_option("--trials", opt.trials, "trials per law");
    laws->add_option("--seed", opt.seed, "random seed");

    auto* oracle = app.add_subcommand("oracle", "finite-universe extension verifier");
    oracle->add_option("spec", partition_spec, "partition spec, e.g. \"0,1:1/2;2,3:1/2\"");
    oracle->add_option("--random", random_args, "<universe> <trials>: verify random spaces")
        ->expected(2);
    oracle->add_option("--seed", opt.seed, "random seed");
    add_format(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    if (measure->parsed()) return run_measure(expr_a, opt);
    if (dist->parsed()) return run_dist(expr_a, expr_b, opt);
    if (approx->parsed()) return run_approx(expr_a, opt);
    if (laws->parsed()) return run_laws(opt);
    if (oracle->parsed()) {
        int universe = 0, trials = 0;
        if (!random_args.empty()) {
            try {
                universe = std::stoi(random_args[0]);
                trials = std::stoi(random_args[1]);
            } catch (const std::exception&) {
                std::cerr << "error: --random expects two integers\n";
                return kExitParseError;
            }
        } else if (partition_spec.empty()) {
            std::cerr << "error: oracle needs a partition spec or --random\n";
            return kExitParseError;
        }
        return run_oracle(partition_spec, universe, trials, opt);
    }
    return kExitParseError;
}
