#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace pforge {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

struct Bounds {
    double lo = 0.0;
    double hi = 1.0;
};

/// One individual: a decision vector with its evaluated objectives, plus the
/// rank/crowding stamps written by the most recent non-dominated sort pass.
struct Solution {
    DecisionVector decision;
    ObjectiveVector objectives;
    int rank = 0;
    double crowding = 0.0;
};

enum class XiMode {
    Fixed,
    UniformPerGeneration,
};

/// Optimizer control parameters. Defaults are the reference configuration:
/// p_mut 0.1, population 30, sharing factor 0.65, 100 generations, 5 map
/// epochs, scaling constant 1000, alpha 0.4, mu 0.5.
struct ControlParams {
    double p_mut = 0.1;
    int pop_size = 30;
    double xi = 0.65;
    int generations = 100;
    int som_epochs = 5;
    double s_f = 1000.0;
    double alpha = 0.4;
    double mu = 0.5;
    int pool_size = 20;
    int nu_qabc = 10;
    int nu_tbga = 10;
    XiMode xi_mode = XiMode::Fixed;
    std::optional<int> archive_cap;
    bool reshuffle_each_generation = true;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Deterministic seeded random stream. Child streams derived by label are
/// independent of the parent and of each other; equal seeds and equal label
/// sequences give bit-identical draws, independent of platform or standard
/// library version.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    double uniform(double a, double b);                          // [a, b)
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // [lo, hi]

    RngStream child(std::string_view label) const;

    /// Fisher-Yates shuffle driven by this stream.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(values[i - 1], values[j]);
        }
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

/// Repairs a decision vector into its box bounds, value by value.
DecisionVector clamp_to_bounds(const DecisionVector& x, const std::vector<Bounds>& bounds);

/// Splits a population between the two phases by sharing factor xi:
/// round-half-up((1 - xi) * pop_size) solutions go to the bee-colony phase,
/// the rest to the genetic phase, with a minimum of one solution each.
std::pair<int, int> split_counts(int pop_size, double xi);

}  // namespace pforge
