#include "pforge/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pforge {

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
    constexpr std::uint64_t prime = 1099511628211ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= prime;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

void ControlParams::validate() const {
    if (p_mut < 0.0 || p_mut > 1.0) throw std::invalid_argument("p_mut must be in [0,1]");
    if (pop_size < 2) throw std::invalid_argument("pop_size must be at least 2");
    if (xi < 0.0 || xi > 1.0) throw std::invalid_argument("xi must be in [0,1]");
    if (generations < 0) throw std::invalid_argument("generations must be non-negative");
    if (som_epochs < 1) throw std::invalid_argument("som_epochs must be positive");
    if (!(s_f > 0.0)) throw std::invalid_argument("s_f must be positive");
    if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("alpha must be in (0,1]");
    if (!(mu > 0.0) || mu > 1.0) throw std::invalid_argument("mu must be in (0,1]");
    if (pool_size < 1) throw std::invalid_argument("pool_size must be positive");
    if (nu_qabc < 1 || nu_tbga < 1) throw std::invalid_argument("map unit counts must be positive");
    if (archive_cap && *archive_cap < 1) throw std::invalid_argument("archive_cap must be positive");
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

double RngStream::uniform(double a, double b) {
    // 53-bit mantissa draw in [0,1); bit-stable across standard libraries.
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
}

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(gen_());  // full 64-bit range
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % range;
    std::uint64_t r;
    do {
        r = gen_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % range);
}

RngStream RngStream::child(std::string_view label) const {
    return RngStream(splitmix64(fnv1a(label, splitmix64(seed_))));
}

DecisionVector clamp_to_bounds(const DecisionVector& x, const std::vector<Bounds>& bounds) {
    if (x.size() != bounds.size()) throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
    DecisionVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (bounds[i].lo > bounds[i].hi) throw std::invalid_argument("clamp_to_bounds: inverted bounds");
        out[i] = std::min(bounds[i].hi, std::max(bounds[i].lo, x[i]));
    }
    return out;
}

std::pair<int, int> split_counts(int pop_size, double xi) {
    if (pop_size < 2) throw std::invalid_argument("split_counts: pop_size must be at least 2");
    if (xi < 0.0 || xi > 1.0) throw std::invalid_argument("split_counts: xi must be in [0,1]");
    // Half-up rounding; the epsilon keeps exact .5 products (e.g. 0.35 * 30)
    // from landing just below the threshold in floating point.
    int n_qabc = static_cast<int>(std::floor((1.0 - xi) * pop_size + 0.5 + 1e-9));
    n_qabc = std::clamp(n_qabc, 1, pop_size - 1);
    return {n_qabc, pop_size - n_qabc};
}

}  // namespace pforge
