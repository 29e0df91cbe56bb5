#include "pforge/som.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pforge/dominance.hpp"

namespace pforge {

namespace {

constexpr double kScalingFloor = 1e-9;
constexpr double kWinnerPenalty = 0.3;
constexpr double kLoserDecay = 0.8;

double distance(const DecisionVector& a, const DecisionVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

double squash(double z) {
    if (z < 0.0) throw std::invalid_argument("squash: negative input");
    return 1.0 - 1.0 / (1.0 + z);
}

bool gate_y(const Solution& input, const SomUnit& unit) {
    return dominates(input.objectives, unit.objectives);
}

SomCenter::SomCenter(std::vector<SomUnit> units, DecisionVector e1, DecisionVector e2, ProblemSpec problem,
                     double alpha, double mu, double s_f, int epochs)
    : units_(std::move(units)),
      e1_(std::move(e1)),
      e2_(std::move(e2)),
      problem_(std::move(problem)),
      alpha_(alpha),
      mu_(mu),
      s_f_(s_f),
      epochs_(epochs) {
    if (units_.empty()) throw std::invalid_argument("SomCenter: needs at least one unit");
    if (static_cast<int>(e1_.size()) != problem_.dimension || e2_.size() != e1_.size())
        throw std::invalid_argument("SomCenter: moment dimension mismatch");
    refresh_scaling();
}

SomCenter SomCenter::random_init(int unit_count, const ProblemSpec& problem, const ControlParams& params,
                                 RngStream& rng) {
    std::vector<SomUnit> units;
    units.reserve(unit_count);
    for (int j = 0; j < unit_count; ++j) {
        SomUnit u;
        u.weight = random_point(problem, rng);
        u.objectives = evaluate(problem, u.weight);
        units.push_back(std::move(u));
    }
    DecisionVector e1(problem.dimension);
    DecisionVector e2(problem.dimension);
    for (double& v : e1) v = rng.uniform(0.0, 0.01);
    for (double& v : e2) v = rng.uniform(0.0, 0.01);
    return SomCenter(std::move(units), std::move(e1), std::move(e2), problem, params.alpha, params.mu,
                     params.s_f, params.som_epochs);
}

void SomCenter::refresh_scaling() {
    double var = 0.0;
    for (std::size_t i = 0; i < e1_.size(); ++i) var += e2_[i] - e1_[i] * e1_[i];
    var /= static_cast<double>(e1_.size());
    sl_ = std::sqrt(std::max(kScalingFloor, var));
}

void SomCenter::update_scaling(const DecisionVector& input) {
    if (input.size() != e1_.size()) throw std::invalid_argument("update_scaling: dimension mismatch");
    for (std::size_t i = 0; i < input.size(); ++i) {
        e1_[i] += mu_ * (input[i] - e1_[i]);
        e2_[i] += mu_ * (input[i] * input[i] - e2_[i]);
    }
    refresh_scaling();
}

int SomCenter::select_bmu(const DecisionVector& input) const {
    int best = 0;
    double best_score = distance(input, units_[0].weight) - units_[0].bias;
    for (int j = 1; j < static_cast<int>(units_.size()); ++j) {
        const double score = distance(input, units_[j].weight) - units_[j].bias;
        if (score < best_score) {
            best = j;
            best_score = score;
        }
    }
    return best;
}

void SomCenter::update_conscience(int winner) {
    for (int j = 0; j < static_cast<int>(units_.size()); ++j) {
        if (j == winner)
            units_[j].bias -= kWinnerPenalty;
        else
            units_[j].bias *= kLoserDecay;
    }
}

void SomCenter::update_learning_rate(int unit_index, const Solution& input) {
    SomUnit& unit = units_[unit_index];
    const double z = distance(input.decision, unit.weight) / (s_f_ * sl_);
    unit.learning_rate += alpha_ * (squash(z) - unit.learning_rate);
}

std::vector<Solution> SomCenter::train(const std::vector<Solution>& inputs, RngStream& rng) {
    std::vector<Solution> incomparable;
    if (inputs.empty()) return incomparable;

    std::vector<int> order(inputs.size());
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 0; epoch < epochs_; ++epoch) {
        rng.shuffle(order);
        for (const int idx : order) {
            const Solution& input = inputs[idx];
            update_scaling(input.decision);
            const int winner = select_bmu(input.decision);
            update_conscience(winner);
            update_learning_rate(winner, input);

            SomUnit& unit = units_[winner];
            if (!gate_y(input, unit)) continue;

            DecisionVector moved(unit.weight.size());
            for (std::size_t d = 0; d < moved.size(); ++d)
                moved[d] = unit.weight[d] + unit.learning_rate * (input.decision[d] - unit.weight[d]);
            moved = clamp_to_bounds(moved, problem_.bounds);
            ObjectiveVector moved_obj = evaluate(problem_, moved);

            if (dominates(moved_obj, unit.objectives)) {
                unit.weight = std::move(moved);
                unit.objectives = std::move(moved_obj);
            } else if (moved_obj != unit.objectives && !dominates(unit.objectives, moved_obj)) {
                incomparable.push_back(Solution{std::move(moved), std::move(moved_obj), 0, 0.0});
            }
        }
    }
    return incomparable;
}

std::vector<Solution> SomCenter::unit_solutions() const {
    std::vector<Solution> out;
    out.reserve(units_.size());
    for (const auto& u : units_) out.push_back(Solution{u.weight, u.objectives, 0, 0.0});
    return out;
}

}  // namespace pforge
