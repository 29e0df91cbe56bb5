#include "pforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pforge {

namespace {

double sq_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

bool f1_less(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a[0] != b[0] ? a[0] < b[0] : a < b;
}

// Nearest squared distance from p into a set sorted by first objective.
// Expands a window around the f1 insertion point; |f1 difference| bounds the
// distance from below, so the scan stops early.
double nearest_sq(const ObjectiveVector& p, const std::vector<ObjectiveVector>& sorted) {
    const int n = static_cast<int>(sorted.size());
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), p, f1_less);
    int right = static_cast<int>(it - sorted.begin());
    int left = right - 1;
    double best = std::numeric_limits<double>::infinity();
    while (left >= 0 || right < n) {
        if (left >= 0) {
            const double df = p[0] - sorted[left][0];
            if (df * df >= best) {
                left = -1;
            } else {
                best = std::min(best, sq_distance(p, sorted[left]));
                --left;
            }
        }
        if (right < n) {
            const double df = sorted[right][0] - p[0];
            if (df * df >= best) {
                right = n;
            } else {
                best = std::min(best, sq_distance(p, sorted[right]));
                ++right;
            }
        }
    }
    return best;
}

double mean_nearest(const std::vector<ObjectiveVector>& from, const std::vector<ObjectiveVector>& to) {
    if (from.empty() || to.empty()) throw std::invalid_argument("metric: empty point set");
    std::vector<ObjectiveVector> sorted = to;
    std::sort(sorted.begin(), sorted.end(), f1_less);
    double sum = 0.0;
    for (const auto& p : from) sum += std::sqrt(nearest_sq(p, sorted));
    return sum / static_cast<double>(from.size());
}

// Reference extremes paired by first objective: minimum-f1 point with the
// front's first point, maximum-f1 with its last.
std::pair<ObjectiveVector, ObjectiveVector> ref_extremes(const std::vector<ObjectiveVector>& ref) {
    if (ref.empty()) throw std::invalid_argument("metric: empty reference front");
    const auto [lo, hi] = std::minmax_element(ref.begin(), ref.end(), f1_less);
    return {*lo, *hi};
}

}  // namespace

double gamma_metric(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref) {
    return mean_nearest(front, ref);
}

double igd(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref) {
    return mean_nearest(ref, front);
}

double delta_metric(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref) {
    if (front.size() < 2) throw std::invalid_argument("delta_metric: front needs at least two points");
    std::vector<ObjectiveVector> f = front;
    std::sort(f.begin(), f.end(), f1_less);
    const auto [ref_lo, ref_hi] = ref_extremes(ref);

    const double d_f = std::sqrt(sq_distance(f.front(), ref_lo));
    const double d_l = std::sqrt(sq_distance(f.back(), ref_hi));

    const int gaps = static_cast<int>(f.size()) - 1;
    std::vector<double> d(gaps);
    double mean = 0.0;
    for (int i = 0; i < gaps; ++i) {
        d[i] = std::sqrt(sq_distance(f[i], f[i + 1]));
        mean += d[i];
    }
    mean /= gaps;

    double deviation = 0.0;
    for (const double di : d) deviation += std::abs(di - mean);

    const double denom = d_f + d_l + gaps * mean;
    return denom > 0.0 ? (d_f + d_l + deviation) / denom : 0.0;
}

double spread_metric(const std::vector<ObjectiveVector>& front, const std::vector<ObjectiveVector>& ref) {
    if (front.size() < 2) throw std::invalid_argument("spread_metric: front needs at least two points");
    std::vector<ObjectiveVector> f = front;
    std::sort(f.begin(), f.end(), f1_less);
    const auto [ref_lo, ref_hi] = ref_extremes(ref);

    const double d_f = std::sqrt(sq_distance(f.front(), ref_lo));
    const double d_l = std::sqrt(sq_distance(f.back(), ref_hi));

    // nearest-neighbor distance per point, scanning outward in f1 order
    const int n = static_cast<int>(f.size());
    std::vector<double> d(n);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = i - 1; j >= 0; --j) {
            const double df = f[i][0] - f[j][0];
            if (df * df >= best) break;
            best = std::min(best, sq_distance(f[i], f[j]));
        }
        for (int j = i + 1; j < n; ++j) {
            const double df = f[j][0] - f[i][0];
            if (df * df >= best) break;
            best = std::min(best, sq_distance(f[i], f[j]));
        }
        d[i] = std::sqrt(best);
        mean += d[i];
    }
    mean /= n;

    double deviation = 0.0;
    for (const double di : d) deviation += std::abs(di - mean);

    const double denom = d_f + d_l + n * mean;
    return denom > 0.0 ? (d_f + d_l + deviation) / denom : 0.0;
}

std::pair<double, double> aggregate(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("aggregate: empty input");
    const int n = static_cast<int>(values.size());
    double mean = 0.0;
    for (const double v : values) mean += v;
    mean /= n;
    if (n == 1) return {mean, 0.0};
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1))};
}

}  // namespace pforge
