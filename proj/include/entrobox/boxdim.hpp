#pragma once

#include "entrobox/covering.hpp"
#include "entrobox/geometry.hpp"

#include <cstdint>
#include <vector>

namespace entrobox {

/// Number of distinct axis-aligned boxes of side `delta` meeting the cloud.
/// The grid lives in R^(2d) (each complex coordinate split into two reals) and
/// is anchored at the origin. With `offset_max` set, the count is maximised
/// over the 2^(2d) half-cell grid shifts (capped at 2d <= 16).
std::size_t box_count(const PointCloud& cloud, double delta, bool offset_max = false);

struct DimensionEstimate {
    std::vector<std::pair<double, std::size_t>> scales; // (delta, count), delta decreasing
    std::vector<double> slope_table;                    // log2(count)/n per scale
    double regression_slope = 0.0;                      // OLS slope of log2 N against n
    double lower_est = 0.0;                             // min per-scale slope, last 3 scales
    double upper_est = 0.0;                             // max per-scale slope, last 3 scales
    bool saturated = false;                             // counts stopped growing at the tail
};

/// Box-counting estimate over the dyadic scales delta_n = 2^-n, n_min..n_max.
DimensionEstimate dim_estimate(const PointCloud& cloud, int n_min, int n_max,
                               bool offset_max = false);

enum class BridgeClass {
    FiniteDimConsistent,
    InfiniteDimConsistent,
    Inconclusive,
};

struct BridgeConfig {
    // A profile classifies finite when every tail upper_n^(1/n) stays at or
    // below theta_finite, infinite when every tail lower_n^(1/n) stays at or
    // above theta_infinite. Keeping theta_finite < theta_infinite makes the
    // two classes mutually exclusive (roots are ordered pointwise). Defaults
    // are calibrated for desk-scale tails (n <= 24); both are configuration,
    // not theorems.
    double theta_finite = 0.75;
    double theta_infinite = 0.80;
    std::size_t tail = 4;
};

struct BridgeResult {
    BridgeClass classification = BridgeClass::Inconclusive;
    double max_tail_upper_root = 0.0; // max over tail of upper_n^(1/n)
    double min_tail_lower_root = 0.0; // min over tail of lower_n^(1/n)
};

/// Root statistic linking entropy decay to box dimension: geometric decay of
/// e_n (roots bounded away from 1) is the finite-dimension signature,
/// subexponential decay (roots drifting to 1) the infinite-dimension one.
BridgeResult entropy_dim_bridge(const EntropyProfile& profile, const BridgeConfig& config = {});

const char* to_string(BridgeClass c);

} // namespace entrobox
