#pragma once

#include "entrobox/geometry.hpp"
#include "entrobox/homopoly.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace entrobox {

/// Black-box m-homogeneous evaluator between finite-dimensional spaces.
struct PolyMap {
    std::function<ComplexVector(const ComplexVector&)> eval;
    std::uint32_t degree = 1;
    std::size_t domain_dim = 1;
    std::size_t codomain_dim = 1;
};

PolyMap poly_map_from_family(const std::vector<NumericPoly>& coords);

/// Maximal numerical Jacobian rank over seeded random sample points: count of
/// singular values above tol x the largest one.
std::size_t generic_rank(const std::vector<NumericPoly>& polys, std::size_t trials,
                         std::uint64_t seed, double tol = 1e-9);
std::size_t generic_rank(const std::vector<ExactPoly>& polys, std::size_t trials,
                         std::uint64_t seed, double tol = 1e-9);

/// Numerical dimension of the linear span of a cloud (SVD rank of the point
/// matrix at relative tolerance tol).
std::size_t numeric_span_rank(const PointCloud& cloud, double tol = 1e-9);

struct CoordinatePolyOptions {
    double independence_tol = 1e-9; // smallest/largest singular value cutoff
    double condition_limit = 1e10;
    double residual_limit = 1e-8;   // relative interpolation residual
    // Optional projection onto span{P(x_1)..P(x_N)}; when absent the
    // orthogonal projection implied by least squares is used.
    std::optional<std::function<ComplexVector(const ComplexVector&)>> projection;
};

/// Recovers the N scalar polynomials p_j with
///   R(P(a_1 x_1 + ... + a_N x_N)) = sum_j p_j(a) P(x_j),
/// by sampling on a roots-of-unity grid sized to the monomial count and
/// solving the monomial interpolation system. Requires {P(x_j)} numerically
/// independent; p_j(e_i) = delta_ij holds for the result.
std::vector<NumericPoly> coordinate_polynomials(const PolyMap& map,
                                                const std::vector<ComplexVector>& xs,
                                                const CoordinatePolyOptions& opts = {});

} // namespace entrobox
