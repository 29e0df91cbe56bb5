#pragma once

#include <utility>
#include <vector>

#include "pforge/core.hpp"
#include "pforge/problems.hpp"
#include "pforge/qabc.hpp"
#include "pforge/som.hpp"

namespace pforge {

/// Total box-constraint deviation of a decision vector (zero when in bounds).
double bounds_violation(const DecisionVector& x, const std::vector<Bounds>& bounds);

/// Binary tournament with feasibility-first rules: a feasible candidate beats
/// an infeasible one, two infeasible candidates go to the lower deviation,
/// otherwise the crowded comparison decides. The first draw wins exact ties;
/// a single-member population returns that member.
const Solution& tournament_select(const std::vector<Solution>& pop, const ProblemSpec& problem,
                                  RngStream& rng);

/// Simulated binary crossover, distribution index eta, applied per dimension
/// with the given probability. Children are clamped and evaluated.
std::pair<Solution, Solution> sbx_crossover(const Solution& p1, const Solution& p2,
                                            const ProblemSpec& problem, RngStream& rng, double eta = 15.0,
                                            double per_dim_prob = 0.5);

/// Polynomial mutation, distribution index eta, per-variable probability
/// 1/dimension unless overridden. Child is clamped and evaluated.
Solution polynomial_mutate(const Solution& parent, const ProblemSpec& problem, RngStream& rng,
                           double eta = 20.0, double per_var_prob = -1.0);

/// Children produced in pair slots: per slot one uniform draw gates the
/// operator — mutation of two tournament parents when the draw falls below
/// p_mut, otherwise crossover of two tournament parents.
struct ChildBatch {
    std::vector<Solution> children;
    int mutation_slots = 0;
    int crossover_slots = 0;
};

ChildBatch produce_children(const std::vector<Solution>& parents, int count, double p_mut,
                            const ProblemSpec& problem, RngStream& rng);

/// One generation of the genetic phase: rank the subpopulation, train the map
/// on the current elite set, produce pool_size children, combine with the
/// old subpopulation and keep the input size by elitist crowded truncation.
PhaseResult run_tbga_phase(std::vector<Solution> subpop, SomCenter& center, const ControlParams& params,
                           const ProblemSpec& problem, RngStream& rng);

}  // namespace pforge
