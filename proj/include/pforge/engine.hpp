#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pforge/archive.hpp"
#include "pforge/core.hpp"
#include "pforge/problems.hpp"

namespace pforge {

struct TraceEntry {
    int generation = 0;
    int archive_size = 0;
};

/// Everything one seeded run produces: the last merged population, the
/// archive contents, the weight vectors of both map centers and a
/// per-generation trace.
struct RunResult {
    std::vector<Solution> final_population;
    std::vector<Solution> archive_members;
    std::vector<Solution> som_weights_qabc;
    std::vector<Solution> som_weights_tbga;
    std::vector<TraceEntry> trace;
    std::uint64_t seed = 0;
    ControlParams params;
    std::string problem;
    double wall_time_seconds = 0.0;
};

/// Concatenates the two phase outputs (bee phase first) and re-normalizes to
/// pop_size by crowded truncation if the guards changed sizes.
std::vector<Solution> collection_site_merge(std::vector<Solution> qabc_out, std::vector<Solution> tbga_out,
                                            int pop_size);

/// The synchronous two-phase optimizer: each generation the population is
/// split by the sharing factor, the bee-colony and genetic phases run
/// independently (fork/join, each owning its subpopulation, map center and
/// random stream), their exports merge at the collection site and both
/// archive batches apply in fixed order, so results are bit-reproducible.
RunResult run_sslpsa(const ProblemSpec& problem, const ControlParams& params, std::uint64_t seed);

/// Canonical elitist non-dominated-sorting GA baseline: binary tournaments
/// fill a mating pool of pool_size parents, crossover produces pop_size
/// children (each mutated with probability p_mut), and the combined
/// population is truncated by rank then crowding. The archive field of the
/// result holds the final rank-0 front.
RunResult run_nsga2(const ProblemSpec& problem, const ControlParams& params, std::uint64_t seed);

/// Baseline defaults: 100 chromosomes, pool 20, p_mut 0.1, 100 generations.
ControlParams nsga2_default_params();

}  // namespace pforge
