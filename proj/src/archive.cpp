#include "pforge/archive.hpp"

#include <algorithm>

#include "pforge/dominance.hpp"

namespace pforge {

bool Archive::offer(const Solution& s) {
    for (const auto& m : members_) {
        if (m.objectives == s.objectives || dominates(m.objectives, s.objectives)) return false;
    }
    std::erase_if(members_, [&](const Solution& m) { return dominates(s.objectives, m.objectives); });
    members_.push_back(s);
    if (cap_ && static_cast<int>(members_.size()) > *cap_) evict_least_crowded();
    return true;
}

void Archive::offer_all(const std::vector<Solution>& batch) {
    for (const auto& s : batch) offer(s);
}

void Archive::evict_least_crowded() {
    std::vector<ObjectiveVector> objs;
    objs.reserve(members_.size());
    for (const auto& m : members_) objs.push_back(m.objectives);
    const std::vector<double> dist = crowding_distance(objs);
    const auto it = std::min_element(dist.begin(), dist.end());
    members_.erase(members_.begin() + (it - dist.begin()));
}

}  // namespace pforge
