#pragma once

#include <vector>

#include "pforge/core.hpp"
#include "pforge/problems.hpp"

namespace pforge {

/// One mobile map unit: a weight vector living in decision space, its
/// evaluated objectives, an adaptive per-unit learning rate and a conscience
/// bias (always <= 0).
struct SomUnit {
    DecisionVector weight;
    ObjectiveVector objectives;
    double learning_rate = 0.95;
    double bias = 0.0;
};

/// Bounded ramp used by the adaptive learning-rate rule:
/// squash(0) = 0, strictly increasing, bounded above by 1.
double squash(double z);

/// Domination gate: 1 iff the presented solution dominates the unit.
bool gate_y(const Solution& input, const SomUnit& unit);

/// Self-organizing map with per-unit adaptive learning rates, input-driven
/// distance scaling and a conscience mechanism. Weight vectors migrate toward
/// presented non-dominated solutions, gated by Pareto domination; a unit only
/// adopts a moved weight that dominates its old one, and moved weights that
/// are merely incomparable are handed back for archive insertion.
class SomCenter {
public:
    /// Explicit-state constructor; units must already be evaluated.
    SomCenter(std::vector<SomUnit> units, DecisionVector e1, DecisionVector e2, ProblemSpec problem,
              double alpha, double mu, double s_f, int epochs);

    /// Weights drawn uniformly over the problem box; moment estimates start
    /// at small uniform values in [0, 0.01].
    static SomCenter random_init(int unit_count, const ProblemSpec& problem, const ControlParams& params,
                                 RngStream& rng);

    /// Online moment update for one presented decision vector, then
    /// sl = sqrt(mean positive part of the per-dimension variance estimate),
    /// floored at 1e-9 under the root.
    void update_scaling(const DecisionVector& input);

    /// Best-matching unit by bias-adjusted decision-space distance
    /// argmin_j (||input - W_j|| - b_j); ties go to the lowest index.
    int select_bmu(const DecisionVector& input) const;

    /// Winner pays a fixed bias penalty, every other unit's bias decays.
    void update_conscience(int winner);

    /// h <- h + alpha * (squash(||R - W|| / (s_f * sl)) - h).
    void update_learning_rate(int unit_index, const Solution& input);

    /// One training round: for each of the configured epochs, presents the
    /// inputs in an order shuffled by rng and runs the per-presentation
    /// pipeline (scaling, BMU, conscience, learning rate, gated weight move).
    /// Returns the moved weights that ended up incomparable with their unit's
    /// previous objectives, for archive insertion. Empty input is a no-op.
    std::vector<Solution> train(const std::vector<Solution>& inputs, RngStream& rng);

    const std::vector<SomUnit>& units() const { return units_; }
    double scaling() const { return sl_; }
    const DecisionVector& first_moment() const { return e1_; }
    const DecisionVector& second_moment() const { return e2_; }

    /// Current weights as evaluated solutions (rank/crowding unstamped).
    std::vector<Solution> unit_solutions() const;

private:
    void refresh_scaling();

    std::vector<SomUnit> units_;
    DecisionVector e1_;
    DecisionVector e2_;
    ProblemSpec problem_;
    double alpha_;
    double mu_;
    double s_f_;
    int epochs_;
    double sl_ = 0.0;
};

}  // namespace pforge
