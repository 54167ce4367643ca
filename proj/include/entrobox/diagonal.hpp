#pragma once

#include "entrobox/covering.hpp"
#include "entrobox/geometry.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace entrobox {

/// Diagonal operator model: coordinatewise multiplication by a nonincreasing
/// positive weight sequence, acting on the sup-norm ball. Its image is the
/// weighted polydisc {x : |x_k| <= w_k}.
struct DiagonalModel {
    std::vector<double> weights;
    NormKind ambient = NormKind::sup();
};

DiagonalModel make_diagonal_model(std::vector<double> weights);

/// Weights (eps, eps^2, ..., eps^N).
DiagonalModel geometric_weights(double epsilon, std::size_t N);

struct CsBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Closed-form two-sided bound for the n-th dyadic entropy number of the
/// diagonal model: lower = max_{1<=k<=N} 2^(-(n-1)/(2k)) (w_1...w_k)^(1/k),
/// upper = 6x the same maximum taken over 1<=k<N (for N = 1 the upper falls
/// back to 6x the k=1 term). The two printed ranges can cross for very large
/// n at small N; callers that build profiles check for that.
CsBounds carl_stephani_bounds(const DiagonalModel& model, std::size_t n);

/// Profile of the truncated geometric-weight model: lower bound as above and
/// upper bound inflated by the truncation tail eps^N.
EntropyProfile example_K_profile(double epsilon, std::size_t N, std::size_t n_max);

struct Envelope {
    double C1 = 0.0;
    double C2 = 0.0;
    double s = 0.0; // min(eps, 1/2)
    double S = 0.0; // max(eps, 1/2)
};

/// Largest C1 and smallest C2 with C1 s^sqrt(n-1) <= lower_n and
/// upper_n <= C2 S^sqrt(n-1) across the range, against example_K_profile.
Envelope asymptotic_envelope(double epsilon, std::size_t n_lo, std::size_t n_hi);

bool envelope_brackets(const Envelope& env, const EntropyProfile& profile);

/// Partition of 1..sum(m!) into consecutive blocks of sizes 1!, 2!, ..., N_max!.
struct SigmaPartition {
    struct Block {
        std::size_t N = 1;     // block label
        std::size_t start = 1; // first index, 1-based
        std::size_t size = 1;  // N!
    };
    std::vector<Block> blocks;
};

SigmaPartition build_sigma_partition(std::size_t N_max);

struct SigmaBlockRow {
    std::size_t N = 1;
    std::uint64_t n_index = 2; // N! + 1
    double lower = 0.0;        // enumerated supremum = 2^(-1/2) 2^(-rN)
    double upper = 0.0;        // 6x the strict-range supremum
    std::map<double, double> p_partial_sums; // p -> cumulative gap-weighted sum
};

/// Block-diagonal powers model at radius 2^-r: per block N the entropy bound
/// at index N!+1 together with running sums of ((N+1)! - N!) * lower^p for
/// p in {1, 1.5, 2}. Capped at N_max <= 5 (factorial growth).
std::vector<SigmaBlockRow> sigma_partition_profile(std::size_t r, std::size_t N_max);

/// Deterministic sample of the weighted polydisc {x : |x_k| <= w_k}, sup norm.
PointCloud sample_weighted_polydisc(const std::vector<double>& weights, std::size_t count,
                                    std::uint64_t seed);

} // namespace entrobox
