#include "entrobox/diagonal.hpp"

#include "entrobox/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace entrobox {

namespace {

// log2 of the k-th bound term 2^(-(n-1)/(2k)) * geomean(w_1..w_k), from a
// prefix sum of log2 weights.
double log2_term(const std::vector<double>& prefix_log2, std::size_t k, std::size_t n) {
    double geo = prefix_log2[k] / static_cast<double>(k);
    return -(static_cast<double>(n - 1) / (2.0 * static_cast<double>(k))) + geo;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

DiagonalModel make_diagonal_model(std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("DiagonalModel: needs at least one weight");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0))
            throw std::invalid_argument("DiagonalModel: weights must be strictly positive");
        if (i > 0 && weights[i] > weights[i - 1])
            throw std::invalid_argument("DiagonalModel: weights must be nonincreasing");
    }
    return DiagonalModel{std::move(weights), NormKind::sup()};
}

DiagonalModel geometric_weights(double epsilon, std::size_t N) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("geometric_weights: epsilon must lie in (0,1)");
    if (N < 1) throw std::invalid_argument("geometric_weights: N must be >= 1");
    std::vector<double> w(N);
    double acc = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        acc *= epsilon;
        w[k] = acc;
    }
    return make_diagonal_model(std::move(w));
}

CsBounds carl_stephani_bounds(const DiagonalModel& model, std::size_t n) {
    if (n < 1) throw std::invalid_argument("carl_stephani_bounds: n must be >= 1");
    const std::size_t N = model.weights.size();
    std::vector<double> prefix(N + 1, 0.0);
    for (std::size_t k = 1; k <= N; ++k)
        prefix[k] = prefix[k - 1] + std::log2(model.weights[k - 1]);

    double best_lower = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= N; ++k)
        best_lower = std::max(best_lower, log2_term(prefix, k, n));

    double best_upper = -std::numeric_limits<double>::infinity();
    if (N == 1) {
        best_upper = log2_term(prefix, 1, n); // strict range is empty; fall back to k=1
    } else {
        for (std::size_t k = 1; k < N; ++k)
            best_upper = std::max(best_upper, log2_term(prefix, k, n));
    }
    return CsBounds{std::exp2(best_lower), 6.0 * std::exp2(best_upper)};
}

EntropyProfile example_K_profile(double epsilon, std::size_t N, std::size_t n_max) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("example_K_profile: epsilon must lie in (0,1)");
    DiagonalModel model = geometric_weights(epsilon, N);
    const double tail = std::pow(epsilon, static_cast<double>(N));
    std::vector<EntropyEntry> entries;
    entries.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        CsBounds b = carl_stephani_bounds(model, n);
        if (b.lower > b.upper + tail)
            throw std::domain_error("example_K_profile: printed bound ranges cross at this n");
        entries.push_back({n, b.lower, b.upper + tail, "carl-stephani+tail"});
    }
    return EntropyProfile(std::move(entries));
}

Envelope asymptotic_envelope(double epsilon, std::size_t n_lo, std::size_t n_hi) {
    if (n_lo < 1 || n_lo > n_hi)
        throw std::invalid_argument("asymptotic_envelope: empty n range");
    Envelope env;
    env.s = std::min(epsilon, 0.5);
    env.S = std::max(epsilon, 0.5);

    std::size_t N = std::max<std::size_t>(
        8, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_hi - 1)))) + 2);
    EntropyProfile profile = example_K_profile(epsilon, N, n_hi);

    double c1 = std::numeric_limits<double>::infinity();
    double c2 = 0.0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const EntropyEntry& e = profile[n - 1];
        double root = std::sqrt(static_cast<double>(n - 1));
        c1 = std::min(c1, e.lower / std::pow(env.s, root));
        c2 = std::max(c2, e.upper / std::pow(env.S, root));
    }
    // Nudge so the fitted constants re-verify under float rounding.
    env.C1 = c1 * (1.0 - 1e-12);
    env.C2 = c2 * (1.0 + 1e-12);
    return env;
}

bool envelope_brackets(const Envelope& env, const EntropyProfile& profile) {
    for (const EntropyEntry& e : profile.entries()) {
        double root = std::sqrt(static_cast<double>(e.n - 1));
        if (env.C1 * std::pow(env.s, root) > e.lower) return false;
        if (e.upper > env.C2 * std::pow(env.S, root)) return false;
    }
    return true;
}

SigmaPartition build_sigma_partition(std::size_t N_max) {
    if (N_max < 1 || N_max > 5)
        throw std::invalid_argument("build_sigma_partition: N_max must lie in 1..5");
    SigmaPartition part;
    std::size_t start = 1;
    for (std::size_t N = 1; N <= N_max; ++N) {
        std::size_t size = static_cast<std::size_t>(factorial(N));
        part.blocks.push_back({N, start, size});
        start += size;
    }
    return part;
}

std::vector<SigmaBlockRow> sigma_partition_profile(std::size_t r, std::size_t N_max) {
    if (r < 1) throw std::invalid_argument("sigma_partition_profile: r must be >= 1");
    if (N_max < 1 || N_max > 5)
        throw std::invalid_argument("sigma_partition_profile: N_max must lie in 1..5");

    const std::vector<double> ps = {1.0, 1.5, 2.0};
    std::map<double, double> running;
    for (double p : ps) running[p] = 0.0;

    std::vector<SigmaBlockRow> rows;
    for (std::size_t N = 1; N <= N_max; ++N) {
        const std::uint64_t block = factorial(N);
        const double radius_pow = std::exp2(-static_cast<double>(r) * static_cast<double>(N));

        // Block weights are constant, so the bound terms reduce to
        // 2^(-block/(2k)) * 2^(-rN); enumerate k directly.
        double sup_full = -std::numeric_limits<double>::infinity();
        double sup_strict = -std::numeric_limits<double>::infinity();
        for (std::uint64_t k = 1; k <= block; ++k) {
            double t = -static_cast<double>(block) / (2.0 * static_cast<double>(k));
            sup_full = std::max(sup_full, t);
            if (k < block) sup_strict = std::max(sup_strict, t);
        }
        if (block == 1) sup_strict = sup_full;

        SigmaBlockRow row;
        row.N = N;
        row.n_index = block + 1;
        row.lower = std::exp2(sup_full) * radius_pow;
        row.upper = 6.0 * std::exp2(sup_strict) * radius_pow;
        const double gap = static_cast<double>(factorial(N + 1) - block);
        for (double p : ps) {
            running[p] += gap * std::pow(row.lower, p);
            row.p_partial_sums[p] = running[p];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

PointCloud sample_weighted_polydisc(const std::vector<double>& weights, std::size_t count,
                                    std::uint64_t seed) {
    if (weights.empty()) throw std::invalid_argument("sample_weighted_polydisc: no weights");
    if (count < 1) throw std::invalid_argument("sample_weighted_polydisc: count must be >= 1");
    RandomStream rng(seed);
    std::vector<ComplexVector> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Complex> e(weights.size());
        for (std::size_t k = 0; k < weights.size(); ++k) {
            double rad = weights[k] * std::sqrt(rng.uniform());
            double ang = 2.0 * std::numbers::pi * rng.uniform();
            e[k] = Complex(rad * std::cos(ang), rad * std::sin(ang));
        }
        pts.emplace_back(std::move(e));
    }
    return PointCloud(std::move(pts), NormKind::sup(), "weighted-polydisc");
}

} // namespace entrobox
