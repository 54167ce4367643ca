#include "entrobox/polyfit.hpp"

#include "entrobox/rng.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace entrobox {

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVectorE = Eigen::VectorXcd;

std::size_t svd_rank(const CMatrix& m, double tol) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cutoff = tol * sv(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

ComplexVector random_point(RandomStream& rng, std::size_t dim) {
    std::vector<Complex> e(dim);
    for (std::size_t i = 0; i < dim; ++i) e[i] = Complex(rng.normal(), rng.normal());
    return ComplexVector(std::move(e));
}

} // namespace

PolyMap poly_map_from_family(const std::vector<NumericPoly>& coords) {
    if (coords.empty()) throw std::invalid_argument("poly_map_from_family: empty family");
    const std::size_t d = coords.front().nvars();
    const std::uint32_t m = coords.front().degree();
    for (const auto& p : coords)
        if (p.nvars() != d || p.degree() != m)
            throw std::invalid_argument("poly_map_from_family: family must share shape");
    std::vector<NumericPoly> family = coords;
    PolyMap map;
    map.degree = m;
    map.domain_dim = d;
    map.codomain_dim = coords.size();
    map.eval = [family](const ComplexVector& z) {
        std::vector<Complex> out(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) out[i] = family[i].evaluate(z);
        return ComplexVector(std::move(out));
    };
    return map;
}

std::size_t generic_rank(const std::vector<NumericPoly>& polys, std::size_t trials,
                         std::uint64_t seed, double tol) {
    if (polys.empty()) return 0;
    if (trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");
    const std::size_t n = polys.front().nvars();
    std::vector<std::vector<NumericPoly>> partials(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) partials[i].push_back(polys[i].derivative(j));

    RandomStream rng(seed);
    std::size_t best = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        ComplexVector z = random_point(rng, n);
        CMatrix jac(polys.size(), n);
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) jac(static_cast<Eigen::Index>(i),
                                                    static_cast<Eigen::Index>(j)) =
                partials[i][j].evaluate(z);
        best = std::max(best, svd_rank(jac, tol));
        if (best == std::min(polys.size(), n)) break; // cannot grow further
    }
    return best;
}

std::size_t generic_rank(const std::vector<ExactPoly>& polys, std::size_t trials,
                         std::uint64_t seed, double tol) {
    std::vector<NumericPoly> numeric;
    numeric.reserve(polys.size());
    for (const auto& p : polys) numeric.push_back(p.to_numeric());
    return generic_rank(numeric, trials, seed, tol);
}

std::size_t numeric_span_rank(const PointCloud& cloud, double tol) {
    if (cloud.empty()) return 0;
    // Gram accumulation keeps this O(n d^2) for large clouds.
    const std::size_t d = cloud.dim();
    CMatrix gram(d, d);
    gram.setZero();
    for (std::size_t j = 0; j < cloud.size(); ++j) {
        CVectorE p(d);
        for (std::size_t i = 0; i < d; ++i) p(static_cast<Eigen::Index>(i)) = cloud[j][i];
        gram += p * p.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    const auto& ev = es.eigenvalues();
    double top = ev(ev.size() - 1);
    if (top <= 0.0) return 0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) > tol * tol * top) ++rank;
    return rank;
}

std::vector<NumericPoly> coordinate_polynomials(const PolyMap& map,
                                                const std::vector<ComplexVector>& xs,
                                                const CoordinatePolyOptions& opts) {
    const std::size_t N = xs.size();
    if (N == 0) throw std::invalid_argument("coordinate_polynomials: no base points");
    for (const auto& x : xs)
        if (x.dim() != map.domain_dim)
            throw std::invalid_argument("coordinate_polynomials: base point dimension mismatch");

    // Images and their independence.
    CMatrix images(map.codomain_dim, N);
    for (std::size_t j = 0; j < N; ++j) {
        ComplexVector y = map.eval(xs[j]);
        if (y.dim() != map.codomain_dim)
            throw std::invalid_argument("coordinate_polynomials: evaluator codomain mismatch");
        for (std::size_t i = 0; i < map.codomain_dim; ++i)
            images(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = y[i];
    }
    Eigen::JacobiSVD<CMatrix> img_svd(images, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = img_svd.singularValues();
    if (sv.size() < static_cast<Eigen::Index>(N) ||
        sv(static_cast<Eigen::Index>(N - 1)) <= opts.independence_tol * sv(0)) {
        std::ostringstream msg;
        msg << "coordinate_polynomials: images are numerically dependent (sigma_min/sigma_max = "
            << (sv.size() ? sv(sv.size() - 1) / sv(0) : 0.0) << ")";
        throw std::runtime_error(msg.str());
    }

    // Basis coordinates of the projected value: least squares against the
    // image matrix realises the projection onto span{P(x_j)}.
    auto basis_coords = [&](const ComplexVector& y_raw) {
        ComplexVector y = y_raw;
        if (opts.projection) y = (*opts.projection)(y_raw);
        CVectorE rhs(map.codomain_dim);
        for (std::size_t i = 0; i < map.codomain_dim; ++i)
            rhs(static_cast<Eigen::Index>(i)) = y[i];
        CVectorE c = img_svd.solve(rhs);
        return c;
    };

    // Interpolation nodes: a deterministic subsample of the (m+1)-th
    // roots-of-unity tensor grid, sized to the monomial count.
    const std::vector<MultiIndex> monos = enumerate_monomials(N, map.degree);
    const std::size_t C = monos.size();
    const std::uint64_t L = map.degree + 1;
    std::uint64_t grid_size = 1;
    bool grid_overflow = false;
    for (std::size_t i = 0; i < N; ++i) {
        if (grid_size > UINT64_MAX / L) {
            grid_overflow = true;
            break;
        }
        grid_size *= L;
    }
    // Full grid when it is small enough, else a prime-stride subsample (the
    // stride is coprime to L^N for every L <= 5, so node indices are distinct).
    const bool full_grid = !grid_overflow && grid_size <= 2 * C + N + 1;
    const std::size_t K = full_grid ? static_cast<std::size_t>(grid_size) : 2 * C + N + 1;
    const std::uint64_t stride = 9223372036854775783ull;

    std::vector<ComplexVector> nodes;
    nodes.reserve(K);
    for (std::size_t t = 0; t < K; ++t) {
        std::uint64_t idx = full_grid ? static_cast<std::uint64_t>(t)
                            : grid_overflow
                                ? (static_cast<std::uint64_t>(t) * stride)
                                : (static_cast<std::uint64_t>(t) * stride) % grid_size;
        std::vector<Complex> a(N);
        for (std::size_t v = 0; v < N; ++v) {
            std::uint64_t digit = idx % L;
            idx /= L;
            double ang = 2.0 * std::numbers::pi * static_cast<double>(digit) /
                         static_cast<double>(L);
            a[v] = Complex(std::cos(ang), std::sin(ang));
        }
        nodes.emplace_back(std::move(a));
    }

    CMatrix vander(K, C);
    for (std::size_t t = 0; t < K; ++t)
        for (std::size_t q = 0; q < C; ++q) {
            Complex v = 1.0;
            for (std::size_t var = 0; var < N; ++var)
                for (std::uint32_t e = 0; e < monos[q][var]; ++e) v *= nodes[t][var];
            vander(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(q)) = v;
        }

    CMatrix rhs(K, N);
    for (std::size_t t = 0; t < K; ++t) {
        std::vector<Complex> arg(map.domain_dim, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < map.domain_dim; ++i) arg[i] += nodes[t][j] * xs[j][i];
        CVectorE c = basis_coords(map.eval(ComplexVector(arg)));
        for (std::size_t j = 0; j < N; ++j)
            rhs(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) =
                c(static_cast<Eigen::Index>(j));
    }

    Eigen::JacobiSVD<CMatrix> vsvd(vander, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& vsv = vsvd.singularValues();
    double cond = vsv(vsv.size() - 1) > 0.0 ? vsv(0) / vsv(vsv.size() - 1)
                                            : std::numeric_limits<double>::infinity();
    if (cond > opts.condition_limit) {
        std::ostringstream msg;
        msg << "coordinate_polynomials: interpolation grid ill-conditioned (cond = " << cond
            << ")";
        throw std::runtime_error(msg.str());
    }
    CMatrix coeffs = vsvd.solve(rhs);

    double scale = rhs.norm();
    double resid = (vander * coeffs - rhs).norm();
    if (scale > 0.0 && resid > opts.residual_limit * scale) {
        std::ostringstream msg;
        msg << "coordinate_polynomials: interpolation residual too large (relative residual = "
            << resid / scale << ", cond = " << cond << ")";
        throw std::runtime_error(msg.str());
    }

    double max_coeff = coeffs.cwiseAbs().maxCoeff();
    double drop = 1e-11 * std::max(1.0, max_coeff);
    std::vector<NumericPoly> out;
    out.reserve(N);
    for (std::size_t j = 0; j < N; ++j) {
        NumericPoly p(N, map.degree);
        for (std::size_t q = 0; q < C; ++q) {
            Complex c = coeffs(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(j));
            if (std::abs(c) > drop) p.add_term(monos[q], c);
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace entrobox
