#include "pforge/dominance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pforge {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("dominates: dimension mismatch");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

FrontSet fast_nondominated_sort(std::vector<Solution>& pop) {
    if (pop.empty()) throw std::invalid_argument("fast_nondominated_sort: empty population");
    const int n = static_cast<int>(pop.size());

    FrontSet fs;
    fs.domination_count.assign(n, 0);
    fs.dominated_set.assign(n, {});

    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (dominates(pop[p].objectives, pop[q].objectives)) {
                fs.dominated_set[p].push_back(q);
                ++fs.domination_count[q];
            } else if (dominates(pop[q].objectives, pop[p].objectives)) {
                fs.dominated_set[q].push_back(p);
                ++fs.domination_count[p];
            }
        }
    }

    std::vector<int> remaining = fs.domination_count;
    std::vector<int> current;
    for (int p = 0; p < n; ++p) {
        if (remaining[p] == 0) {
            current.push_back(p);
            pop[p].rank = 0;
        }
    }
    while (!current.empty()) {
        fs.fronts.push_back(current);
        std::vector<int> next;
        for (const int p : current) {
            for (const int q : fs.dominated_set[p]) {
                if (--remaining[q] == 0) {
                    pop[q].rank = static_cast<int>(fs.fronts.size());
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());  // fronts list members in input order
        current = std::move(next);
    }
    return fs;
}

std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(front.size());
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    const int m = static_cast<int>(front[0].size());
    std::vector<int> order(n);
    for (int k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return front[a][k] < front[b][k]; });
        dist[order[0]] = inf;
        dist[order[n - 1]] = inf;
        const double range = front[order[n - 1]][k] - front[order[0]][k];
        if (range <= 0.0) continue;
        for (int i = 1; i + 1 < n; ++i) {
            if (dist[order[i]] == inf) continue;
            dist[order[i]] += (front[order[i + 1]][k] - front[order[i - 1]][k]) / range;
        }
    }
    return dist;
}

void stamp_crowding(std::vector<Solution>& pop, const FrontSet& fronts) {
    std::vector<ObjectiveVector> objs;
    for (const auto& front : fronts.fronts) {
        objs.clear();
        objs.reserve(front.size());
        for (const int i : front) objs.push_back(pop[i].objectives);
        const std::vector<double> dist = crowding_distance(objs);
        for (std::size_t j = 0; j < front.size(); ++j) pop[front[j]].crowding = dist[j];
    }
}

FrontSet rank_population(std::vector<Solution>& pop) {
    FrontSet fs = fast_nondominated_sort(pop);
    stamp_crowding(pop, fs);
    return fs;
}

int crowded_compare(const Solution& a, const Solution& b) {
    if (a.rank != b.rank) return a.rank < b.rank ? -1 : 1;
    if (a.crowding != b.crowding) return a.crowding > b.crowding ? -1 : 1;
    return 0;
}

bool crowded_less(const Solution& a, const Solution& b) { return crowded_compare(a, b) < 0; }

std::vector<Solution> crowded_truncate(std::vector<Solution> pop, int target) {
    rank_population(pop);
    if (target >= static_cast<int>(pop.size())) return pop;
    std::vector<int> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return crowded_less(pop[a], pop[b]); });
    std::vector<Solution> kept;
    kept.reserve(target);
    for (int i = 0; i < target; ++i) kept.push_back(std::move(pop[order[i]]));
    return kept;
}

}  // namespace pforge
