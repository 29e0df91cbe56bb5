#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pforge/core.hpp"

namespace pforge {

enum class ProblemId { Zdt1, Zdt2, Zdt3, Zdt4, Zdt6, Sch, Fon };

/// A dual-objective benchmark: id, dimension and per-variable box bounds.
struct ProblemSpec {
    ProblemId id = ProblemId::Zdt1;
    std::string name;
    int dimension = 0;
    std::vector<Bounds> bounds;
    int objective_count = 2;
};

ProblemSpec make_problem(ProblemId id);
std::optional<ProblemId> problem_from_name(std::string_view name);
const std::vector<std::string>& problem_names();

/// Evaluates both objectives. The input must have the declared dimension and
/// lie within bounds (callers clamp before evaluating); violations throw
/// std::invalid_argument.
ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x);

/// k points on the analytic Pareto-optimal front, uniformly spaced in the
/// front's parameterization with both endpoints included. ZDT3 emits only
/// its discontinuous optimal stretches.
std::vector<ObjectiveVector> true_front_sample(const ProblemSpec& spec, int k);

/// Uniform random point inside the problem's box.
DecisionVector random_point(const ProblemSpec& spec, RngStream& rng);

Solution make_solution(const ProblemSpec& spec, DecisionVector x);

}  // namespace pforge
