#include "entrobox/boxdim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace entrobox {

namespace {

struct CellHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::int64_t x : v) {
            std::uint64_t u = static_cast<std::uint64_t>(x);
            h ^= u + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::size_t count_with_shift(const PointCloud& cloud, double delta, std::uint32_t shift_bits) {
    std::unordered_set<std::vector<std::int64_t>, CellHash> cells;
    cells.reserve(cloud.size());
    const std::size_t d = cloud.dim();
    std::vector<std::int64_t> key(2 * d);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            double re = cloud[i][c].real();
            double im = cloud[i][c].imag();
            double sre = ((shift_bits >> (2 * c)) & 1) ? 0.5 * delta : 0.0;
            double sim = ((shift_bits >> (2 * c + 1)) & 1) ? 0.5 * delta : 0.0;
            key[2 * c] = static_cast<std::int64_t>(std::floor((re + sre) / delta));
            key[2 * c + 1] = static_cast<std::int64_t>(std::floor((im + sim) / delta));
        }
        cells.insert(key);
    }
    return cells.size();
}

} // namespace

std::size_t box_count(const PointCloud& cloud, double delta, bool offset_max) {
    if (!(delta > 0.0)) throw std::invalid_argument("box_count: delta must be positive");
    if (cloud.empty()) return 0;
    if (!offset_max) return count_with_shift(cloud, delta, 0);

    const std::size_t real_dims = 2 * cloud.dim();
    if (real_dims > 16)
        throw std::invalid_argument("box_count: offset averaging capped at 2d <= 16");
    std::size_t best = 0;
    for (std::uint32_t bits = 0; bits < (1u << real_dims); ++bits)
        best = std::max(best, count_with_shift(cloud, delta, bits));
    return best;
}

DimensionEstimate dim_estimate(const PointCloud& cloud, int n_min, int n_max, bool offset_max) {
    if (n_min >= n_max) throw std::invalid_argument("dim_estimate: requires n_min < n_max");
    if (cloud.empty()) throw std::invalid_argument("dim_estimate: empty cloud");

    DimensionEstimate est;
    for (int n = n_min; n <= n_max; ++n) {
        double delta = std::ldexp(1.0, -n);
        est.scales.emplace_back(delta, box_count(cloud, delta, offset_max));
    }
    const std::size_t k = est.scales.size();
    for (std::size_t i = 0; i < k; ++i) {
        double n = static_cast<double>(n_min) + static_cast<double>(i);
        est.slope_table.push_back(std::log2(static_cast<double>(est.scales[i].second)) / n);
    }

    // OLS of log2 N against n over the window.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double x = static_cast<double>(n_min) + static_cast<double>(i);
        double y = std::log2(static_cast<double>(est.scales[i].second));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = static_cast<double>(k) * sxx - sx * sx;
    est.regression_slope = denom != 0.0 ? (static_cast<double>(k) * sxy - sx * sy) / denom : 0.0;

    const std::size_t tail = std::min<std::size_t>(3, k);
    est.lower_est = est.slope_table[k - tail];
    est.upper_est = est.slope_table[k - tail];
    for (std::size_t i = k - tail; i < k; ++i) {
        est.lower_est = std::min(est.lower_est, est.slope_table[i]);
        est.upper_est = std::max(est.upper_est, est.slope_table[i]);
    }

    for (std::size_t i = k >= 2 ? k - 2 : 0; i + 1 < k; ++i)
        if (est.scales[i].second == est.scales[i + 1].second) est.saturated = true;
    return est;
}

BridgeResult entropy_dim_bridge(const EntropyProfile& profile, const BridgeConfig& config) {
    if (profile.size() < 4)
        throw std::invalid_argument("entropy_dim_bridge: profile needs at least 4 entries");

    const std::size_t tail = std::min(config.tail, profile.size());
    BridgeResult res;
    res.max_tail_upper_root = 0.0;
    res.min_tail_lower_root = std::numeric_limits<double>::infinity();
    for (std::size_t i = profile.size() - tail; i < profile.size(); ++i) {
        const EntropyEntry& e = profile[i];
        double inv_n = 1.0 / static_cast<double>(e.n);
        double up_root = e.upper > 0.0 ? std::pow(e.upper, inv_n) : 0.0;
        double lo_root = e.lower > 0.0 ? std::pow(e.lower, inv_n) : 0.0;
        res.max_tail_upper_root = std::max(res.max_tail_upper_root, up_root);
        res.min_tail_lower_root = std::min(res.min_tail_lower_root, lo_root);
    }

    bool finite = res.max_tail_upper_root <= config.theta_finite;
    bool infinite = res.min_tail_lower_root >= config.theta_infinite;
    if (finite && !infinite)
        res.classification = BridgeClass::FiniteDimConsistent;
    else if (infinite && !finite)
        res.classification = BridgeClass::InfiniteDimConsistent;
    else
        res.classification = BridgeClass::Inconclusive;
    return res;
}

const char* to_string(BridgeClass c) {
    switch (c) {
    case BridgeClass::FiniteDimConsistent: return "finite-dim-consistent";
    case BridgeClass::InfiniteDimConsistent: return "infinite-dim-consistent";
    case BridgeClass::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

} // namespace entrobox
