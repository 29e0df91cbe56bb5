#include "pforge/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pforge/dominance.hpp"
#include "pforge/problems.hpp"

namespace pforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ProblemSpec resolve_problem(const std::string& name) {
    const auto id = problem_from_name(name);
    if (!id) throw ConfigError("unknown problem '" + name + "'");
    return make_problem(*id);
}

std::vector<std::string> resolve_algorithms(const std::string& algo, bool allow_both) {
    if (algo == "sslpsa" || algo == "nsga2") return {algo};
    if (algo.empty()) return allow_both ? std::vector<std::string>{"sslpsa", "nsga2"}
                                        : std::vector<std::string>{"sslpsa"};
    if (algo == "both" && allow_both) return {"sslpsa", "nsga2"};
    throw ConfigError("unknown algorithm '" + algo + "'");
}

void apply_key(ExperimentConfig& c, const std::string& key, const json& value) {
    if (key == "problem")
        c.problem = value.get<std::string>();
    else if (key == "algo")
        c.algo = value.get<std::string>();
    else if (key == "runs")
        c.runs = value.get<int>();
    else if (key == "seed")
        c.seed = value.get<std::uint64_t>();
    else if (key == "out")
        c.out = value.get<std::string>();
    else if (key == "generations")
        c.generations = value.get<int>();
    else if (key == "pop")
        c.pop = value.get<int>();
    else if (key == "xi")
        c.xi = value.get<double>();
    else if (key == "xi_mode")
        c.xi_mode = value.get<std::string>();
    else if (key == "pmut")
        c.pmut = value.get<double>();
    else if (key == "pool")
        c.pool = value.get<int>();
    else if (key == "som_units")
        c.som_units = value.get<int>();
    else if (key == "archive_cap") {
        if (!value.is_null()) c.archive_cap = value.get<int>();
    } else if (key == "reshuffle")
        c.reshuffle = value.get<bool>();
    else
        throw ConfigError("unknown config key '" + key + "'");
}

json config_to_json(const ExperimentConfig& c) {
    json j;
    j["problem"] = c.problem;
    if (!c.algo.empty()) j["algo"] = c.algo;
    j["runs"] = c.runs;
    j["seed"] = c.seed;
    j["out"] = c.out;
    if (c.generations) j["generations"] = *c.generations;
    if (c.pop) j["pop"] = *c.pop;
    if (c.xi) j["xi"] = *c.xi;
    if (c.xi_mode) j["xi_mode"] = *c.xi_mode;
    if (c.pmut) j["pmut"] = *c.pmut;
    if (c.pool) j["pool"] = *c.pool;
    if (c.som_units) j["som_units"] = *c.som_units;
    if (c.archive_cap) j["archive_cap"] = *c.archive_cap;
    if (c.reshuffle) j["reshuffle"] = *c.reshuffle;
    return j;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_front_files(const fs::path& dir, const RunResult& result) {
    // front.csv and decisions.csv share one (f1, f2)-sorted row order
    std::vector<const Solution*> order;
    order.reserve(result.archive_members.size());
    for (const auto& m : result.archive_members) order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [](const Solution* a, const Solution* b) { return a->objectives < b->objectives; });

    std::string front = "f1,f2\n";
    for (const Solution* s : order)
        front += fmt(s->objectives[0]) + "," + fmt(s->objectives[1]) + "\n";
    write_text(dir / "front.csv", front);

    std::string decisions;
    const int dim = order.empty() ? 0 : static_cast<int>(order.front()->decision.size());
    for (int d = 0; d < dim; ++d) decisions += (d ? ",x" : "x") + std::to_string(d + 1);
    decisions += "\n";
    for (const Solution* s : order) {
        for (std::size_t d = 0; d < s->decision.size(); ++d) {
            if (d) decisions += ",";
            decisions += fmt(s->decision[d]);
        }
        decisions += "\n";
    }
    write_text(dir / "decisions.csv", decisions);
}

void write_trace(const fs::path& dir, const RunResult& result) {
    std::string trace = "generation,archive_size\n";
    for (const auto& t : result.trace)
        trace += std::to_string(t.generation) + "," + std::to_string(t.archive_size) + "\n";
    write_text(dir / "trace.csv", trace);
}

void write_result_json(const fs::path& dir, const ExperimentConfig& config, const std::string& algo,
                       const RunResult& result) {
    ExperimentConfig effective = config;
    effective.algo = algo;
    const ControlParams p = result.params;
    effective.generations = p.generations;
    effective.pop = p.pop_size;
    effective.xi = p.xi;
    effective.xi_mode = p.xi_mode == XiMode::Fixed ? "fixed" : "uniform";
    effective.pmut = p.p_mut;
    effective.pool = p.pool_size;
    effective.som_units = p.nu_qabc;
    if (p.archive_cap) effective.archive_cap = *p.archive_cap;
    effective.reshuffle = p.reshuffle_each_generation;

    json j;
    j["config"] = config_to_json(effective);
    j["result"] = {
        {"problem", result.problem},
        {"algorithm", algo},
        {"seed", result.seed},
        {"generations_run", result.trace.size()},
        {"archive_size", result.archive_members.size()},
        {"final_population_size", result.final_population.size()},
        {"som_weights_qabc", result.som_weights_qabc.size()},
        {"som_weights_tbga", result.som_weights_tbga.size()},
        {"wall_time_seconds", result.wall_time_seconds},
    };
    write_text(dir / "result.json", j.dump(2) + "\n");
}

// Bounded worker pool over [0, n); used for independent seeded runs.
void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                if (failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

int guard(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (j.contains("config")) j = j.at("config");  // result.json round-trip
    ExperimentConfig c;
    try {
        for (const auto& [key, value] : j.items()) apply_key(c, key, value);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config value: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

ControlParams effective_params(const ExperimentConfig& config, const std::string& algo) {
    ControlParams p = algo == "nsga2" ? nsga2_default_params() : ControlParams{};
    if (config.generations) p.generations = *config.generations;
    if (config.pop) p.pop_size = *config.pop;
    if (config.xi) p.xi = *config.xi;
    if (config.xi_mode) {
        if (*config.xi_mode == "fixed")
            p.xi_mode = XiMode::Fixed;
        else if (*config.xi_mode == "uniform")
            p.xi_mode = XiMode::UniformPerGeneration;
        else
            throw ConfigError("xi_mode must be 'fixed' or 'uniform'");
    }
    if (config.pmut) p.p_mut = *config.pmut;
    if (config.pool) p.pool_size = *config.pool;
    if (config.som_units) {
        p.nu_qabc = *config.som_units;
        p.nu_tbga = *config.som_units;
    }
    if (config.archive_cap) p.archive_cap = *config.archive_cap;
    if (config.reshuffle) p.reshuffle_each_generation = *config.reshuffle;
    return p;
}

int thread_cap() {
    if (const char* env = std::getenv("PARETO_FORGE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

RunResult execute_run(const std::string& problem, const std::string& algo, const ExperimentConfig& config,
                      std::uint64_t seed) {
    const ProblemSpec spec = resolve_problem(problem);
    const ControlParams params = effective_params(config, algo);
    return algo == "nsga2" ? run_nsga2(spec, params, seed) : run_sslpsa(spec, params, seed);
}

RunMetrics score_run(const RunResult& result, const std::string& algo,
                     const std::vector<ObjectiveVector>& reference, int run_index) {
    std::vector<ObjectiveVector> front;
    front.reserve(result.archive_members.size());
    for (const auto& m : result.archive_members) front.push_back(m.objectives);

    RunMetrics row;
    row.problem = result.problem;
    row.algorithm = algo;
    row.run = run_index;
    row.seed = result.seed;
    row.gamma = gamma_metric(front, reference);
    row.igd = igd(front, reference);
    row.delta = front.size() >= 2 ? delta_metric(front, reference) : 1.0;
    row.spread = front.size() >= 2 ? spread_metric(front, reference) : 1.0;
    row.archive_size = static_cast<int>(front.size());
    row.wall_time_seconds = result.wall_time_seconds;
    return row;
}

int cmd_run(const ExperimentConfig& config) {
    return guard([&] {
        const std::vector<std::string> algos = resolve_algorithms(config.algo, false);
        if (algos.size() != 1) throw ConfigError("run needs a single algorithm");
        resolve_problem(config.problem);  // reject bad names before any work

        const fs::path dir(config.out);
        fs::create_directories(dir);

        const RunResult result = execute_run(config.problem, algos[0], config, config.seed);
        write_front_files(dir, result);
        write_trace(dir, result);
        write_result_json(dir, config, algos[0], result);
    });
}

int cmd_compare(const ExperimentConfig& config) {
    return guard([&] {
        if (config.runs < 1) throw ConfigError("runs must be at least 1");
        const std::vector<std::string> algos = resolve_algorithms(config.algo, true);
        const ProblemSpec spec = resolve_problem(config.problem);

        const fs::path dir(config.out);
        fs::create_directories(dir);

        const std::vector<ObjectiveVector> reference = true_front_sample(spec, 1000);

        const int total = static_cast<int>(algos.size()) * config.runs;
        std::vector<RunMetrics> rows(total);
        parallel_for(total, thread_cap(), [&](int i) {
            const std::string& algo = algos[i / config.runs];
            const int run = i % config.runs;
            const RunResult result = execute_run(config.problem, algo, config, config.seed + run);
            rows[i] = score_run(result, algo, reference, run);
        });

        std::string metrics_csv =
            "problem,algorithm,run,seed,gamma,delta,igd,spread,archive_size,wall_time\n";
        for (const auto& r : rows) {
            metrics_csv += r.problem + "," + r.algorithm + "," + std::to_string(r.run) + "," +
                           std::to_string(r.seed) + "," + fmt(r.gamma) + "," + fmt(r.delta) + "," +
                           fmt(r.igd) + "," + fmt(r.spread) + "," + std::to_string(r.archive_size) + "," +
                           fmt(r.wall_time_seconds) + "\n";
        }
        write_text(dir / "metrics.csv", metrics_csv);

        std::string summary_csv =
            "problem,algorithm,runs,gamma_mean,gamma_std,delta_mean,delta_std,igd_mean,igd_std,"
            "spread_mean,spread_std,archive_size_mean\n";
        for (std::size_t a = 0; a < algos.size(); ++a) {
            std::vector<double> g, d, i_, s, n;
            for (int r = 0; r < config.runs; ++r) {
                const auto& row = rows[a * config.runs + r];
                g.push_back(row.gamma);
                d.push_back(row.delta);
                i_.push_back(row.igd);
                s.push_back(row.spread);
                n.push_back(row.archive_size);
            }
            const auto [gm, gs] = aggregate(g);
            const auto [dm, ds] = aggregate(d);
            const auto [im, is] = aggregate(i_);
            const auto [sm, ss] = aggregate(s);
            const auto [nm, ns] = aggregate(n);
            (void)ns;
            summary_csv += config.problem + "," + algos[a] + "," + std::to_string(config.runs) + "," +
                           fmt(gm) + "," + fmt(gs) + "," + fmt(dm) + "," + fmt(ds) + "," + fmt(im) + "," +
                           fmt(is) + "," + fmt(sm) + "," + fmt(ss) + "," + fmt(nm) + "\n";
        }
        write_text(dir / "summary.csv", summary_csv);
    });
}

int cmd_front(const std::string& problem, int k, const std::string& path) {
    return guard([&] {
        const ProblemSpec spec = resolve_problem(problem);
        if (k < 2) throw ConfigError("front needs at least 2 points");
        std::vector<ObjectiveVector> front = true_front_sample(spec, k);
        std::sort(front.begin(), front.end());
        std::string csv = "f1,f2\n";
        for (const auto& p : front) csv += fmt(p[0]) + "," + fmt(p[1]) + "\n";
        const fs::path file(path);
        if (file.has_parent_path()) fs::create_directories(file.parent_path());
        write_text(file, csv);
    });
}

}  // namespace pforge
