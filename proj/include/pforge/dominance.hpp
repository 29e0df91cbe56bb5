#pragma once

#include <vector>

#include "pforge/core.hpp"

namespace pforge {

/// Front partition of a population. fronts[0] holds the indices of the
/// non-dominated solutions, fronts[k] the layer peeled after removing all
/// earlier fronts. domination_count[i] is the number of solutions dominating
/// i at input; dominated_set[i] lists the solutions i dominates.
struct FrontSet {
    std::vector<std::vector<int>> fronts;
    std::vector<int> domination_count;
    std::vector<std::vector<int>> dominated_set;
};

/// Pareto domination under minimization: a dominates b iff a is no worse in
/// every objective and strictly better in at least one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Fast elitist non-dominated sort. Stamps rank on each solution and returns
/// the full front partition.
FrontSet fast_nondominated_sort(std::vector<Solution>& pop);

/// Crowding distance of one mutually non-dominated front, aligned with input
/// order. Boundary solutions per objective get +infinity; a zero objective
/// range contributes nothing.
std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front);

/// Writes crowding stamps for every front of a sorted population.
void stamp_crowding(std::vector<Solution>& pop, const FrontSet& fronts);

/// Sort + crowding in one pass; the usual ranking step of a generation.
FrontSet rank_population(std::vector<Solution>& pop);

/// Crowded-comparison: lower rank first, then larger crowding. Returns -1 if
/// a precedes b, 1 if b precedes a, 0 on an exact tie (callers break ties by
/// stable input order).
int crowded_compare(const Solution& a, const Solution& b);

bool crowded_less(const Solution& a, const Solution& b);

/// Ranks the population and keeps the best `target` solutions by front then
/// crowding, stable within exact ties. Whole better fronts always survive
/// ahead of worse ones.
std::vector<Solution> crowded_truncate(std::vector<Solution> pop, int target);

}  // namespace pforge
