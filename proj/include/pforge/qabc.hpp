#pragma once

#include <vector>

#include "pforge/core.hpp"
#include "pforge/problems.hpp"
#include "pforge/som.hpp"

namespace pforge {

/// Output of one phase pass: the updated subpopulation plus the solutions the
/// phase wants offered to the global archive at the generation barrier.
struct PhaseResult {
    std::vector<Solution> subpop;
    std::vector<Solution> archive_batch;
};

/// Single-dimension bee move: v[dim] = x[dim] + phi * (x[dim] - partner[dim]),
/// clamped and evaluated.
Solution abc_move(const Solution& source, const DecisionVector& partner, int dim, double phi,
                  const ProblemSpec& problem);

/// Random neighbor of a food source: random dimension, random partner other
/// than the source, phi ~ uniform(-1, 1). A single-member population perturbs
/// against a fresh uniform random point instead.
Solution neighbor_candidate(const Solution& source, const std::vector<Solution>& pop, int source_index,
                            const ProblemSpec& problem, RngStream& rng);

/// Greedy Pareto selection: domination decides outright; incomparable pairs
/// go to the larger stamped crowding distance, exact ties keep the incumbent.
const Solution& greedy_select(const Solution& incumbent, const Solution& candidate);

/// Binary tournament over stamped foods; the first draw wins exact ties.
int onlooker_pick(const std::vector<Solution>& foods, RngStream& rng);

/// One generation of the bee-colony phase: rank the foods, train the map on
/// the current elite set, then one employed-bee sweep and one onlooker sweep
/// of greedy neighbor searches. There is no scout step, so no food is ever
/// reset to a random point. onlooker_count < 0 means one onlooker per food.
PhaseResult run_qabc_phase(std::vector<Solution> foods, SomCenter& center, const ControlParams& params,
                           const ProblemSpec& problem, RngStream& rng, int onlooker_count = -1);

}  // namespace pforge
