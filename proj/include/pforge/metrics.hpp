#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pforge/core.hpp"

namespace pforge {

/// Convergence metric: mean Euclidean distance from each front point to its
/// nearest reference point.
double gamma_metric(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref);

/// Inverted generational distance: mean distance from each reference point to
/// its nearest front point.
double igd(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref);

/// Diversity metric built from consecutive gaps along the f1-sorted front:
/// (d_f + d_l + sum |d_i - mean|) / (d_f + d_l + (N-1) * mean), where d_f and
/// d_l are the distances from the front's extremes to the reference extremes.
double delta_metric(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref);

/// Spread metric: same shape as the diversity metric but each point
/// contributes its nearest-neighbor distance instead of a consecutive gap.
double spread_metric(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref);

/// Mean and sample standard deviation (N-1 divisor; zero for a single value).
std::pair<double, double> aggregate(const std::vector<double>& values);

/// Per-metric mean/std over a batch of runs of one algorithm on one problem.
struct MetricReport {
    std::string problem;
    std::string algorithm;
    int runs = 0;
    std::pair<double, double> gamma{0.0, 0.0};
    std::pair<double, double> delta{0.0, 0.0};
    std::pair<double, double> igd{0.0, 0.0};
    std::pair<double, double> spread{0.0, 0.0};
};

}  // namespace pforge
