#pragma once

#include <optional>
#include <vector>

#include "pforge/core.hpp"

namespace pforge {

/// Store of every globally non-dominated solution found so far. Members are
/// pairwise non-dominated and objective-distinct; with a cap set, the least
/// crowded member is evicted on overflow (boundary members survive unless
/// everything is boundary).
class Archive {
public:
    Archive() = default;
    explicit Archive(std::optional<int> cap) : cap_(cap) {}

    /// Inserts s unless a member dominates it or duplicates its objectives;
    /// members dominated by s are removed. Returns whether s was accepted.
    bool offer(const Solution& s);

    /// Sequential offers in batch order.
    void offer_all(const std::vector<Solution>& batch);

    const std::vector<Solution>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::optional<int>& cap() const { return cap_; }

private:
    void evict_least_crowded();

    std::vector<Solution> members_;
    std::optional<int> cap_;
};

}  // namespace pforge
