#include "pforge/qabc.hpp"

#include <stdexcept>
#include <utility>

#include "pforge/dominance.hpp"

namespace pforge {

namespace {

// Replaces the slot if the candidate wins the greedy contest. Crowding for
// the incomparable case is stamped over the phase population plus the
// candidate.
void greedy_replace(std::vector<Solution>& foods, int slot, Solution candidate) {
    if (dominates(candidate.objectives, foods[slot].objectives)) {
        foods[slot] = std::move(candidate);
        return;
    }
    if (dominates(foods[slot].objectives, candidate.objectives)) return;
    if (candidate.objectives == foods[slot].objectives) return;

    std::vector<Solution> staged = foods;
    staged.push_back(std::move(candidate));
    rank_population(staged);
    if (&greedy_select(staged[slot], staged.back()) == &staged.back()) foods[slot] = std::move(staged.back());
}

}  // namespace

Solution abc_move(const Solution& source, const DecisionVector& partner, int dim, double phi,
                  const ProblemSpec& problem) {
    DecisionVector v = source.decision;
    v[dim] += phi * (v[dim] - partner[dim]);
    return make_solution(problem, clamp_to_bounds(v, problem.bounds));
}

Solution neighbor_candidate(const Solution& source, const std::vector<Solution>& pop, int source_index,
                            const ProblemSpec& problem, RngStream& rng) {
    const int dim = static_cast<int>(rng.uniform_int(0, problem.dimension - 1));
    const double phi = rng.uniform(-1.0, 1.0);
    if (pop.size() < 2) {
        return abc_move(source, random_point(problem, rng), dim, phi, problem);
    }
    int k = static_cast<int>(rng.uniform_int(0, static_cast<std::int64_t>(pop.size()) - 2));
    if (k >= source_index) ++k;
    return abc_move(source, pop[k].decision, dim, phi, problem);
}

const Solution& greedy_select(const Solution& incumbent, const Solution& candidate) {
    if (dominates(candidate.objectives, incumbent.objectives)) return candidate;
    if (dominates(incumbent.objectives, candidate.objectives)) return incumbent;
    return candidate.crowding > incumbent.crowding ? candidate : incumbent;
}

int onlooker_pick(const std::vector<Solution>& foods, RngStream& rng) {
    if (foods.empty()) throw std::invalid_argument("onlooker_pick: empty foods");
    const int n = static_cast<int>(foods.size());
    const int first = static_cast<int>(rng.uniform_int(0, n - 1));
    const int second = static_cast<int>(rng.uniform_int(0, n - 1));
    return crowded_compare(foods[second], foods[first]) < 0 ? second : first;
}

PhaseResult run_qabc_phase(std::vector<Solution> foods, SomCenter& center, const ControlParams& params,
                           const ProblemSpec& problem, RngStream& rng, int onlooker_count) {
    (void)params;
    if (foods.empty()) throw std::invalid_argument("run_qabc_phase: empty subpopulation");

    rank_population(foods);

    std::vector<Solution> elites;
    for (const auto& f : foods)
        if (f.rank == 0) elites.push_back(f);
    std::vector<Solution> batch = center.train(elites, rng);

    // employed pass: one neighbor move per food
    const int n = static_cast<int>(foods.size());
    for (int i = 0; i < n; ++i) {
        Solution candidate = neighbor_candidate(foods[i], foods, i, problem, rng);
        greedy_replace(foods, i, std::move(candidate));
    }

    // onlooker pass: tournament-chosen foods get another neighbor search each
    const int onlookers = onlooker_count < 0 ? n : onlooker_count;
    for (int o = 0; o < onlookers; ++o) {
        rank_population(foods);
        const int pick = onlooker_pick(foods, rng);
        Solution candidate = neighbor_candidate(foods[pick], foods, pick, problem, rng);
        greedy_replace(foods, pick, std::move(candidate));
    }

    rank_population(foods);
    for (const auto& f : foods)
        if (f.rank == 0) batch.push_back(f);
    return {std::move(foods), std::move(batch)};
}

}  // namespace pforge
