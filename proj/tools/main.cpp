#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pforge/experiment.hpp"

namespace {

struct CliOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> problem;
    std::optional<std::string> algo;
    std::optional<std::uint64_t> seed;
    std::optional<int> runs;
    std::optional<int> generations;
    std::optional<int> pop;
    std::optional<double> xi;
    std::optional<std::string> xi_mode;
    std::optional<double> pmut;
    std::optional<int> pool;
    std::optional<int> som_units;
    std::optional<int> archive_cap;
    std::optional<std::string> out;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config file (flags override it)");
    cmd->add_option("--problem", opt.problem, "benchmark id: zdt1 zdt2 zdt3 zdt4 zdt6 sch fon");
    cmd->add_option("--seed", opt.seed, "base random seed");
    cmd->add_option("--generations", opt.generations, "number of generations");
    cmd->add_option("--pop", opt.pop, "population size");
    cmd->add_option("--xi", opt.xi, "sharing factor in [0,1]");
    cmd->add_option("--xi-mode", opt.xi_mode, "'fixed' or 'uniform' (redrawn each generation)");
    cmd->add_option("--pmut", opt.pmut, "mutation probability");
    cmd->add_option("--pool", opt.pool, "children per genetic-phase generation / mating pool size");
    cmd->add_option("--som-units", opt.som_units, "map units per phase");
    cmd->add_option("--archive-cap", opt.archive_cap, "optional archive size cap");
    cmd->add_option("--out", opt.out, "output directory (or file for 'front')");
}

// CLI flags take precedence over the config file, which beats the defaults.
pforge::ExperimentConfig build_config(const CliOptions& opt) {
    pforge::ExperimentConfig config;
    if (opt.config_path) config = pforge::load_config(*opt.config_path);
    if (opt.problem) config.problem = *opt.problem;
    if (opt.algo) config.algo = *opt.algo;
    if (opt.seed) config.seed = *opt.seed;
    if (opt.runs) config.runs = *opt.runs;
    if (opt.generations) config.generations = *opt.generations;
    if (opt.pop) config.pop = *opt.pop;
    if (opt.xi) config.xi = *opt.xi;
    if (opt.xi_mode) config.xi_mode = *opt.xi_mode;
    if (opt.pmut) config.pmut = *opt.pmut;
    if (opt.pool) config.pool = *opt.pool;
    if (opt.som_units) config.som_units = *opt.som_units;
    if (opt.archive_cap) config.archive_cap = *opt.archive_cap;
    if (opt.out) config.out = *opt.out;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pareto-forge: two-phase self-learning multi-objective optimizer and experiment runner"};
    app.require_subcommand(1);

    CliOptions opt;
    int front_points = 1000;

    CLI::App* run = app.add_subcommand("run", "one seeded run; writes front/decisions/trace/result files");
    run->add_option("--algo", opt.algo, "sslpsa or nsga2");
    add_common_options(run, opt);

    CLI::App* compare =
        app.add_subcommand("compare", "seeded multi-run comparison; writes metrics.csv and summary.csv");
    compare->add_option("--algo", opt.algo, "sslpsa, nsga2, or both (default both)");
    compare->add_option("--runs", opt.runs, "number of seeded runs per algorithm");
    add_common_options(compare, opt);

    CLI::App* front = app.add_subcommand("front", "export a reference Pareto front sample as CSV");
    front->add_option("--problem", opt.problem, "benchmark id");
    front->add_option("-k,--points", front_points, "number of reference points");
    front->add_option("--out", opt.out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (front->parsed()) {
            return pforge::cmd_front(opt.problem.value_or("zdt1"), front_points,
                                     opt.out.value_or("front.csv"));
        }
        const pforge::ExperimentConfig config = build_config(opt);
        return run->parsed() ? pforge::cmd_run(config) : pforge::cmd_compare(config);
    } catch (const pforge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
