#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "twobridge/cli.hpp"

using namespace twobridge;

int main(int argc, char** argv)
{
    CLI::App app{"Riley, Alexander and A-polynomials of 2-bridge knots"};
    app.require_subcommand(1);
    CliConfig cfg;
    cfg.threads = default_threads();

    const std::map<std::string, StrategyChoice> strategies{
        {"prs", StrategyChoice::Prs}, {"evalinterp", StrategyChoice::EvalInterp}, {"both", StrategyChoice::Both}};
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

    struct Sub {
        const char* name;
        const char* help;
        Command cmd;
        bool knot;
    };
    const Sub subs[] = {
        {"riley", "Riley data f, g", Command::Riley, true},
        {"alex", "Alexander polynomial", Command::Alex, true},
        {"apoly", "A-polynomial", Command::APoly, true},
        {"verify", "numeric check against matrix representations", Command::Verify, true},
        {"census", "A-polynomials of every knot up to --max-alpha, as CSV", Command::Census, false},
        {"identities", "run the identity and property suites", Command::Identities, false},
    };
    std::string eps_arg;
    for (const Sub& s : subs) {
        CLI::App* sc = app.add_subcommand(s.name, s.help);
        if (s.knot) {
            auto* k = sc->add_option("--knot", cfg.knot, "fraction alpha/beta or sign string");
            auto* e = sc->add_option("--eps", eps_arg, "sign string such as +--+");
            k->excludes(e);
        }
        sc->add_option("--strategy", cfg.strategy, "prs, evalinterp or both")
            ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
        sc->add_option("--output", cfg.output, "text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sc->add_flag("--squarefree", cfg.squarefree, "print the squarefree part");
        sc->add_option("--max-alpha", cfg.max_alpha, "largest alpha for census and identities")
            ->check(CLI::Range(1, 99));
        sc->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sc->add_option("--seed", cfg.seed, "seed for sampled checks");
        sc->add_option("--samples", cfg.samples, "M0 samples for verify")->check(CLI::PositiveNumber);
        sc->add_flag("--timing", cfg.timing, "report wall time");
        sc->callback([&cfg, s] { cfg.command = s.cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!eps_arg.empty()) cfg.knot = eps_arg;
    return run(cfg, std::cout, std::cerr);
}
