// Test-only reference implementations, kept independent of the library code
// paths they check.
#pragma once

#include "entrobox/exactc.hpp"
#include "entrobox/geometry.hpp"
#include "entrobox/homopoly.hpp"
#include "entrobox/rng.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <vector>

namespace entrobox::oracle {

// Exact minimum number of closed intervals of radius eps covering a finite
// subset of R, centers anywhere: the classic left-to-right sweep.
inline std::size_t interval_cover_free_centers(std::vector<double> xs, double eps) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < xs.size()) {
        double reach = xs[i] + 2.0 * eps; // center at xs[i] + eps
        ++count;
        while (i < xs.size() && xs[i] <= reach) ++i;
    }
    return count;
}

// Same with centers restricted to the given points: cover the leftmost
// uncovered point with the admissible center that reaches furthest right.
inline std::size_t interval_cover_point_centers(std::vector<double> xs, double eps) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < xs.size()) {
        double limit = xs[i] + eps;
        double center = xs[i];
        for (std::size_t j = i; j < xs.size() && xs[j] <= limit; ++j) center = xs[j];
        ++count;
        double covered_to = center + eps;
        while (i < xs.size() && xs[i] <= covered_to) ++i;
    }
    return count;
}

// Exhaustive minimum set cover with balls centered at cloud points (tiny
// clouds only: 2^size subsets).
inline std::size_t exhaustive_cover(const PointCloud& cloud, double eps) {
    const std::size_t n = cloud.size();
    if (n == 0) return 0;
    std::vector<std::uint32_t> ball(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            if (distance(cloud[i], cloud[c], cloud.norm()) <= eps) ball[c] |= (1u << i);
    const std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    std::size_t best = n;
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        std::uint32_t covered = 0;
        std::size_t used = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (subset & (1u << c)) {
                covered |= ball[c];
                ++used;
            }
        if (covered == full) best = std::min(best, used);
    }
    return best;
}

// Exhaustive maximum strictly-eps-separated subset (tiny clouds only).
inline std::size_t exhaustive_packing(const PointCloud& cloud, double eps) {
    const std::size_t n = cloud.size();
    std::size_t best = 0;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        bool ok = true;
        std::size_t size = 0;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!(subset & (1u << a))) continue;
            ++size;
            for (std::size_t b = a + 1; b < n && ok; ++b)
                if ((subset & (1u << b)) &&
                    distance(cloud[a], cloud[b], cloud.norm()) <= eps)
                    ok = false;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

// Direct enumeration of the diagonal-operator bound terms (independent
// arrangement: long double logs).
struct DiagBound {
    double lower;
    double upper;
    std::size_t argmax_k;
};

inline DiagBound diag_bound_enumeration(const std::vector<double>& weights, std::size_t n) {
    const std::size_t N = weights.size();
    long double best_low = -1.0L;
    std::size_t best_k = 0;
    long double best_up = -1.0L;
    for (std::size_t k = 1; k <= N; ++k) {
        long double logsum = 0.0L;
        for (std::size_t i = 0; i < k; ++i) logsum += std::log((long double)weights[i]);
        long double term = std::exp(-(long double)(n - 1) * std::numbers::ln2_v<long double> /
                                        (2.0L * (long double)k) +
                                    logsum / (long double)k);
        if (term > best_low) {
            best_low = term;
            best_k = k;
        }
        if (k < N || N == 1) best_up = std::max(best_up, term);
    }
    return DiagBound{static_cast<double>(best_low), static_cast<double>(6.0L * best_up), best_k};
}

// Numeric corank of the rank-preservation system: rows built by polynomial
// arithmetic (products), nullity via SVD. Valid for small integer families.
inline std::size_t numeric_corank(const ExactPoly& Q,
                                  const std::vector<std::vector<ExactPoly>>& Qij,
                                  std::size_t nvars, std::uint32_t m, std::size_t r) {
    std::vector<MultiIndex> basis = enumerate_monomials(nvars, m);
    std::vector<NumericPoly> rows_per_basis;
    std::vector<std::vector<NumericPoly>> columns; // [j][gamma]
    for (std::size_t j = r; j < nvars; ++j) {
        std::vector<NumericPoly> col;
        for (const MultiIndex& gamma : basis) {
            NumericPoly zg = NumericPoly::monomial(nvars, gamma, Complex(1.0, 0.0));
            NumericPoly acc = Q.to_numeric() * zg.derivative(j);
            for (std::size_t i = 0; i < r; ++i)
                acc = acc + Qij[i][j - r].to_numeric() * zg.derivative(i);
            col.push_back(std::move(acc));
        }
        columns.push_back(std::move(col));
    }
    // Collect every monomial appearing anywhere, then assemble the matrix.
    std::vector<MultiIndex> deltas;
    for (const auto& col : columns)
        for (const auto& p : col)
            for (const auto& [mi, c] : p.terms()) {
                if (std::find(deltas.begin(), deltas.end(), mi) == deltas.end())
                    deltas.push_back(mi);
            }
    Eigen::MatrixXcd A(static_cast<Eigen::Index>(deltas.size() * columns.size()),
                       static_cast<Eigen::Index>(basis.size()));
    A.setZero();
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t g = 0; g < basis.size(); ++g)
            for (const auto& [mi, c] : columns[j][g].terms()) {
                std::size_t d =
                    std::find(deltas.begin(), deltas.end(), mi) - deltas.begin();
                A(static_cast<Eigen::Index>(j * deltas.size() + d),
                  static_cast<Eigen::Index>(g)) = c;
            }
    if (A.rows() == 0) return basis.size();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    const auto& sv = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-9 * sv(0)) ++rank;
    return basis.size() - rank;
}

// Seeded random exact polynomial with small integer coefficients.
inline ExactPoly random_int_poly(std::size_t nvars, std::uint32_t degree, RandomStream& rng,
                                 long lo = -3, long hi = 3) {
    ExactPoly p(nvars, degree);
    for (const MultiIndex& mi : enumerate_monomials(nvars, degree)) {
        long span = hi - lo + 1;
        long c = lo + static_cast<long>(rng.bits() % static_cast<std::uint64_t>(span));
        if (c != 0) p.add_term(mi, ExactComplex(c));
    }
    return p;
}

} // namespace entrobox::oracle
