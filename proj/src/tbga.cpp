#include "pforge/tbga.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "pforge/dominance.hpp"

namespace pforge {

double bounds_violation(const DecisionVector& x, const std::vector<Bounds>& bounds) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < bounds[i].lo) total += bounds[i].lo - x[i];
        if (x[i] > bounds[i].hi) total += x[i] - bounds[i].hi;
    }
    return total;
}

const Solution& tournament_select(const std::vector<Solution>& pop, const ProblemSpec& problem,
                                  RngStream& rng) {
    if (pop.empty()) throw std::invalid_argument("tournament_select: empty population");
    if (pop.size() < 2) return pop.front();

    const int n = static_cast<int>(pop.size());
    const int i = static_cast<int>(rng.uniform_int(0, n - 1));
    int j = static_cast<int>(rng.uniform_int(0, n - 2));
    if (j >= i) ++j;

    const Solution& a = pop[i];
    const Solution& b = pop[j];
    const double va = bounds_violation(a.decision, problem.bounds);
    const double vb = bounds_violation(b.decision, problem.bounds);
    if (va == 0.0 && vb > 0.0) return a;
    if (vb == 0.0 && va > 0.0) return b;
    if (va > 0.0 && vb > 0.0) return vb < va ? b : a;
    return crowded_compare(b, a) < 0 ? b : a;
}

std::pair<Solution, Solution> sbx_crossover(const Solution& p1, const Solution& p2,
                                            const ProblemSpec& problem, RngStream& rng, double eta,
                                            double per_dim_prob) {
    DecisionVector c1 = p1.decision;
    DecisionVector c2 = p2.decision;
    for (int d = 0; d < problem.dimension; ++d) {
        if (rng.uniform(0.0, 1.0) >= per_dim_prob) continue;
        const double y1 = p1.decision[d];
        const double y2 = p2.decision[d];
        if (std::abs(y1 - y2) < 1e-14) continue;
        const double u = rng.uniform(0.0, 1.0);
        const double beta = u <= 0.5 ? std::pow(2.0 * u, 1.0 / (eta + 1.0))
                                     : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
        c1[d] = 0.5 * ((1.0 + beta) * y1 + (1.0 - beta) * y2);
        c2[d] = 0.5 * ((1.0 - beta) * y1 + (1.0 + beta) * y2);
    }
    return {make_solution(problem, clamp_to_bounds(c1, problem.bounds)),
            make_solution(problem, clamp_to_bounds(c2, problem.bounds))};
}

Solution polynomial_mutate(const Solution& parent, const ProblemSpec& problem, RngStream& rng, double eta,
                           double per_var_prob) {
    const double prob = per_var_prob < 0.0 ? 1.0 / problem.dimension : per_var_prob;
    const double mut_pow = 1.0 / (eta + 1.0);
    DecisionVector x = parent.decision;
    for (int d = 0; d < problem.dimension; ++d) {
        if (rng.uniform(0.0, 1.0) >= prob) continue;
        const double lo = problem.bounds[d].lo;
        const double hi = problem.bounds[d].hi;
        const double range = hi - lo;
        if (range <= 0.0) continue;
        const double y = x[d];
        const double u = rng.uniform(0.0, 1.0);
        double delta;
        if (u <= 0.5) {
            const double xy = 1.0 - (y - lo) / range;
            delta = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0), mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - (hi - y) / range;
            delta = 1.0 - std::pow(2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0), mut_pow);
        }
        x[d] = y + delta * range;
    }
    return make_solution(problem, clamp_to_bounds(x, problem.bounds));
}

ChildBatch produce_children(const std::vector<Solution>& parents, int count, double p_mut,
                            const ProblemSpec& problem, RngStream& rng) {
    ChildBatch batch;
    batch.children.reserve(count);
    while (static_cast<int>(batch.children.size()) < count) {
        const bool mutate = rng.uniform(0.0, 1.0) < p_mut;
        const Solution& p1 = tournament_select(parents, problem, rng);
        const Solution& p2 = tournament_select(parents, problem, rng);
        if (mutate) {
            ++batch.mutation_slots;
            batch.children.push_back(polynomial_mutate(p1, problem, rng));
            if (static_cast<int>(batch.children.size()) < count)
                batch.children.push_back(polynomial_mutate(p2, problem, rng));
        } else {
            ++batch.crossover_slots;
            auto [c1, c2] = sbx_crossover(p1, p2, problem, rng);
            batch.children.push_back(std::move(c1));
            if (static_cast<int>(batch.children.size()) < count) batch.children.push_back(std::move(c2));
        }
    }
    return batch;
}

PhaseResult run_tbga_phase(std::vector<Solution> subpop, SomCenter& center, const ControlParams& params,
                           const ProblemSpec& problem, RngStream& rng) {
    if (subpop.empty()) throw std::invalid_argument("run_tbga_phase: empty subpopulation");
    const int target = static_cast<int>(subpop.size());

    rank_population(subpop);

    std::vector<Solution> elites;
    for (const auto& s : subpop)
        if (s.rank == 0) elites.push_back(s);
    std::vector<Solution> batch = center.train(elites, rng);

    ChildBatch produced = produce_children(subpop, params.pool_size, params.p_mut, problem, rng);
    for (auto& c : produced.children) subpop.push_back(std::move(c));

    rank_population(subpop);
    for (const auto& s : subpop)
        if (s.rank == 0) batch.push_back(s);

    std::vector<Solution> next = crowded_truncate(std::move(subpop), target);
    return {std::move(next), std::move(batch)};
}

}  // namespace pforge
