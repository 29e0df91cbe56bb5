#include "pforge/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Non-dominated x1 stretches of the ZDT3 curve. Segment starts (after the
// first) sit 1e-9 above the exact envelope crossing so that a sampled start
// is strictly non-dominated against the previous segment's end.
constexpr double kZdt3Segments[5][2] = {
    {0.0, 0.083001534926911633},
    {0.18222872902939978, 0.25776236338783022},
    {0.40931367580865684, 0.45388210408883017},
    {0.61839679543926579, 0.65251170380466252},
    {0.82333179932663274, 0.85183286543641390},
};

// Smallest attainable f1 on the ZDT6 optimal front.
constexpr double kZdt6FrontF1Min = 0.2807753188153697;

const double kFonShift = 1.0 / std::sqrt(3.0);

double zdt_tail_mean(const DecisionVector& x) {
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) sum += x[i];
    return sum / (static_cast<double>(x.size()) - 1.0);
}

double zdt3_curve(double f1) { return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1); }

}  // namespace

ProblemSpec make_problem(ProblemId id) {
    ProblemSpec spec;
    spec.id = id;
    switch (id) {
        case ProblemId::Zdt1:
            spec.name = "zdt1";
            spec.dimension = 30;
            spec.bounds.assign(30, Bounds{0.0, 1.0});
            break;
        case ProblemId::Zdt2:
            spec.name = "zdt2";
            spec.dimension = 30;
            spec.bounds.assign(30, Bounds{0.0, 1.0});
            break;
        case ProblemId::Zdt3:
            spec.name = "zdt3";
            spec.dimension = 30;
            spec.bounds.assign(30, Bounds{0.0, 1.0});
            break;
        case ProblemId::Zdt4:
            spec.name = "zdt4";
            spec.dimension = 10;
            spec.bounds.assign(10, Bounds{-5.0, 5.0});
            spec.bounds[0] = Bounds{0.0, 1.0};
            break;
        case ProblemId::Zdt6:
            spec.name = "zdt6";
            spec.dimension = 10;
            spec.bounds.assign(10, Bounds{0.0, 1.0});
            break;
        case ProblemId::Sch:
            spec.name = "sch";
            spec.dimension = 1;
            spec.bounds.assign(1, Bounds{-1000.0, 1000.0});
            break;
        case ProblemId::Fon:
            spec.name = "fon";
            spec.dimension = 3;
            spec.bounds.assign(3, Bounds{-4.0, 4.0});
            break;
    }
    return spec;
}

std::optional<ProblemId> problem_from_name(std::string_view name) {
    if (name == "zdt1") return ProblemId::Zdt1;
    if (name == "zdt2") return ProblemId::Zdt2;
    if (name == "zdt3") return ProblemId::Zdt3;
    if (name == "zdt4") return ProblemId::Zdt4;
    if (name == "zdt6") return ProblemId::Zdt6;
    if (name == "sch") return ProblemId::Sch;
    if (name == "fon") return ProblemId::Fon;
    return std::nullopt;
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6", "sch", "fon"};
    return names;
}

ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x) {
    if (static_cast<int>(x.size()) != spec.dimension)
        throw std::invalid_argument("evaluate: dimension mismatch for " + spec.name);
    for (int i = 0; i < spec.dimension; ++i) {
        if (x[i] < spec.bounds[i].lo || x[i] > spec.bounds[i].hi)
            throw std::invalid_argument("evaluate: decision vector out of bounds for " + spec.name);
    }

    switch (spec.id) {
        case ProblemId::Zdt1: {
            const double f1 = x[0];
            const double g = 1.0 + 9.0 * zdt_tail_mean(x);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case ProblemId::Zdt2: {
            const double f1 = x[0];
            const double g = 1.0 + 9.0 * zdt_tail_mean(x);
            const double r = f1 / g;
            return {f1, g * (1.0 - r * r)};
        }
        case ProblemId::Zdt3: {
            const double f1 = x[0];
            const double g = 1.0 + 9.0 * zdt_tail_mean(x);
            const double r = f1 / g;
            return {f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1))};
        }
        case ProblemId::Zdt4: {
            const double f1 = x[0];
            double g = 1.0 + 10.0 * (spec.dimension - 1);
            for (int i = 1; i < spec.dimension; ++i)
                g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case ProblemId::Zdt6: {
            const double s = std::sin(6.0 * kPi * x[0]);
            const double f1 = 1.0 - std::exp(-4.0 * x[0]) * s * s * s * s * s * s;
            const double g = 1.0 + 9.0 * std::pow(zdt_tail_mean(x), 0.25);
            const double r = f1 / g;
            return {f1, g * (1.0 - r * r)};
        }
        case ProblemId::Sch: {
            return {x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)};
        }
        case ProblemId::Fon: {
            double s1 = 0.0;
            double s2 = 0.0;
            for (const double v : x) {
                s1 += (v - kFonShift) * (v - kFonShift);
                s2 += (v + kFonShift) * (v + kFonShift);
            }
            return {1.0 - std::exp(-s1), 1.0 - std::exp(-s2)};
        }
    }
    throw std::invalid_argument("evaluate: unknown problem");
}

std::vector<ObjectiveVector> true_front_sample(const ProblemSpec& spec, int k) {
    if (k < 2) throw std::invalid_argument("true_front_sample: k must be at least 2");
    std::vector<ObjectiveVector> front;
    front.reserve(k);
    const auto fraction = [k](int i) { return static_cast<double>(i) / (k - 1); };

    switch (spec.id) {
        case ProblemId::Zdt1:
        case ProblemId::Zdt4:
            for (int i = 0; i < k; ++i) {
                const double f1 = fraction(i);
                front.push_back({f1, 1.0 - std::sqrt(f1)});
            }
            break;
        case ProblemId::Zdt2:
            for (int i = 0; i < k; ++i) {
                const double f1 = fraction(i);
                front.push_back({f1, 1.0 - f1 * f1});
            }
            break;
        case ProblemId::Zdt3: {
            double total = 0.0;
            for (const auto& seg : kZdt3Segments) total += seg[1] - seg[0];
            for (int i = 0; i < k; ++i) {
                double t = fraction(i) * total;
                double f1 = kZdt3Segments[4][1];
                for (const auto& seg : kZdt3Segments) {
                    const double len = seg[1] - seg[0];
                    if (t <= len) {
                        f1 = seg[0] + t;
                        break;
                    }
                    t -= len;
                }
                front.push_back({f1, zdt3_curve(f1)});
            }
            break;
        }
        case ProblemId::Zdt6:
            for (int i = 0; i < k; ++i) {
                const double f1 = kZdt6FrontF1Min + fraction(i) * (1.0 - kZdt6FrontF1Min);
                front.push_back({f1, 1.0 - f1 * f1});
            }
            break;
        case ProblemId::Sch:
            for (int i = 0; i < k; ++i) {
                const double x = 2.0 * fraction(i);
                front.push_back({x * x, (x - 2.0) * (x - 2.0)});
            }
            break;
        case ProblemId::Fon:
            for (int i = 0; i < k; ++i) {
                const double s = -kFonShift + fraction(i) * 2.0 * kFonShift;
                const double d1 = s - kFonShift;
                const double d2 = s + kFonShift;
                front.push_back({1.0 - std::exp(-3.0 * d1 * d1), 1.0 - std::exp(-3.0 * d2 * d2)});
            }
            break;
    }
    return front;
}

DecisionVector random_point(const ProblemSpec& spec, RngStream& rng) {
    DecisionVector x(spec.dimension);
    for (int i = 0; i < spec.dimension; ++i) x[i] = rng.uniform(spec.bounds[i].lo, spec.bounds[i].hi);
    return x;
}

Solution make_solution(const ProblemSpec& spec, DecisionVector x) {
    Solution s;
    s.objectives = evaluate(spec, x);
    s.decision = std::move(x);
    return s;
}

}  // namespace pforge
