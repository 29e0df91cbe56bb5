#include "pforge/engine.hpp"

#include <chrono>
#include <future>
#include <optional>
#include <stdexcept>
#include <utility>

#include "pforge/dominance.hpp"
#include "pforge/qabc.hpp"
#include "pforge/som.hpp"
#include "pforge/tbga.hpp"

namespace pforge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Solution> random_population(const ProblemSpec& problem, int n, RngStream& rng) {
    std::vector<Solution> pop;
    pop.reserve(n);
    for (int i = 0; i < n; ++i) pop.push_back(make_solution(problem, random_point(problem, rng)));
    return pop;
}

std::vector<Solution> rank0_subset(std::vector<Solution> pop) {
    rank_population(pop);
    std::vector<Solution> out;
    for (auto& s : pop)
        if (s.rank == 0) out.push_back(std::move(s));
    return out;
}

}  // namespace

std::vector<Solution> collection_site_merge(std::vector<Solution> qabc_out, std::vector<Solution> tbga_out,
                                            int pop_size) {
    std::vector<Solution> merged = std::move(qabc_out);
    merged.reserve(merged.size() + tbga_out.size());
    for (auto& s : tbga_out) merged.push_back(std::move(s));
    if (static_cast<int>(merged.size()) > pop_size) merged = crowded_truncate(std::move(merged), pop_size);
    return merged;
}

RunResult run_sslpsa(const ProblemSpec& problem, const ControlParams& params, std::uint64_t seed) {
    params.validate();
    const auto start = Clock::now();

    RngStream rng(seed);
    RngStream init_rng = rng.child("init");
    RngStream shuffle_rng = rng.child("shuffle");
    RngStream xi_rng = rng.child("xi");
    RngStream qabc_rng = rng.child("qabc");
    RngStream tbga_rng = rng.child("tbga");

    std::vector<Solution> pop = random_population(problem, params.pop_size, init_rng);
    Archive archive(params.archive_cap);
    archive.offer_all(pop);

    std::optional<SomCenter> qabc_center;
    std::optional<SomCenter> tbga_center;
    std::vector<Solution> qabc_sub;
    std::vector<Solution> tbga_sub;
    std::vector<TraceEntry> trace;
    trace.reserve(params.generations);
    bool split_done = false;

    for (int gen = 1; gen <= params.generations; ++gen) {
        const double xi =
            params.xi_mode == XiMode::UniformPerGeneration ? xi_rng.uniform(0.0, 1.0) : params.xi;

        if (!split_done || params.reshuffle_each_generation) {
            shuffle_rng.shuffle(pop);
            const auto [n_qabc, n_tbga] = split_counts(params.pop_size, xi);
            (void)n_tbga;
            qabc_sub.assign(pop.begin(), pop.begin() + n_qabc);
            tbga_sub.assign(pop.begin() + n_qabc, pop.end());
            split_done = true;
        }

        // first phase entry initializes the centers from the phase streams
        if (!qabc_center)
            qabc_center.emplace(SomCenter::random_init(params.nu_qabc, problem, params, qabc_rng));
        if (!tbga_center)
            tbga_center.emplace(SomCenter::random_init(params.nu_tbga, problem, params, tbga_rng));

        // phases share nothing: fork the bee phase, run the genetic phase
        // here, then join at the collection-site barrier
        auto qabc_future = std::async(std::launch::async, [&] {
            return run_qabc_phase(std::move(qabc_sub), *qabc_center, params, problem, qabc_rng);
        });
        PhaseResult tbga_res = run_tbga_phase(std::move(tbga_sub), *tbga_center, params, problem, tbga_rng);
        PhaseResult qabc_res = qabc_future.get();

        // fixed application order keeps concurrent and serial runs identical
        archive.offer_all(qabc_res.archive_batch);
        archive.offer_all(tbga_res.archive_batch);

        if (params.reshuffle_each_generation) {
            pop = collection_site_merge(std::move(qabc_res.subpop), std::move(tbga_res.subpop),
                                        params.pop_size);
        } else {
            qabc_sub = std::move(qabc_res.subpop);
            tbga_sub = std::move(tbga_res.subpop);
            pop = collection_site_merge(qabc_sub, tbga_sub, params.pop_size);
        }
        trace.push_back({gen, archive.size()});
    }

    RunResult result;
    result.final_population = std::move(pop);
    result.archive_members = archive.members();
    if (qabc_center) result.som_weights_qabc = qabc_center->unit_solutions();
    if (tbga_center) result.som_weights_tbga = tbga_center->unit_solutions();
    result.trace = std::move(trace);
    result.seed = seed;
    result.params = params;
    result.problem = problem.name;
    result.wall_time_seconds = seconds_since(start);
    return result;
}

RunResult run_nsga2(const ProblemSpec& problem, const ControlParams& params, std::uint64_t seed) {
    params.validate();
    const auto start = Clock::now();

    RngStream rng(seed);
    RngStream init_rng = rng.child("init");
    RngStream evolve_rng = rng.child("evolve");

    std::vector<Solution> pop = random_population(problem, params.pop_size, init_rng);
    rank_population(pop);

    std::vector<TraceEntry> trace;
    trace.reserve(params.generations);

    for (int gen = 1; gen <= params.generations; ++gen) {
        std::vector<Solution> pool;
        pool.reserve(params.pool_size);
        for (int k = 0; k < params.pool_size; ++k)
            pool.push_back(tournament_select(pop, problem, evolve_rng));

        std::vector<Solution> children;
        children.reserve(params.pop_size);
        while (static_cast<int>(children.size()) < params.pop_size) {
            const int n = static_cast<int>(pool.size());
            const int i = static_cast<int>(evolve_rng.uniform_int(0, n - 1));
            int j = n > 1 ? static_cast<int>(evolve_rng.uniform_int(0, n - 2)) : i;
            if (n > 1 && j >= i) ++j;
            auto [c1, c2] = sbx_crossover(pool[i], pool[j], problem, evolve_rng);
            if (evolve_rng.uniform(0.0, 1.0) < params.p_mut)
                c1 = polynomial_mutate(c1, problem, evolve_rng);
            children.push_back(std::move(c1));
            if (static_cast<int>(children.size()) < params.pop_size) {
                if (evolve_rng.uniform(0.0, 1.0) < params.p_mut)
                    c2 = polynomial_mutate(c2, problem, evolve_rng);
                children.push_back(std::move(c2));
            }
        }

        for (auto& c : children) pop.push_back(std::move(c));
        pop = crowded_truncate(std::move(pop), params.pop_size);

        int rank0 = 0;
        for (const auto& s : pop)
            if (s.rank == 0) ++rank0;
        trace.push_back({gen, rank0});
    }

    RunResult result;
    result.archive_members = rank0_subset(pop);
    result.final_population = std::move(pop);
    result.trace = std::move(trace);
    result.seed = seed;
    result.params = params;
    result.problem = problem.name;
    result.wall_time_seconds = seconds_since(start);
    return result;
}

ControlParams nsga2_default_params() {
    ControlParams p;
    p.pop_size = 100;
    p.pool_size = 20;
    p.p_mut = 0.1;
    p.generations = 100;
    return p;
}

}  // namespace pforge
