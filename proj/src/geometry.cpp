#include "entrobox/geometry.hpp"

#include "entrobox/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace entrobox {

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; offset keeps log() away from zero.
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (!all_finite())
        throw std::invalid_argument("ComplexVector: entries must be finite");
}

ComplexVector ComplexVector::zero(std::size_t dim) {
    return ComplexVector(std::vector<Complex>(dim, Complex(0.0, 0.0)));
}

bool ComplexVector::all_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

NormKind NormKind::lp(double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("NormKind: p must satisfy p >= 1");
    return NormKind(p);
}

double NormKind::norm(const ComplexVector& x) const {
    if (is_sup()) {
        double m = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x[i]));
        return m;
    }
    if (p_ == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i) s += std::abs(x[i]);
        return s;
    }
    if (p_ == 2.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i) s += std::norm(x[i]);
        return std::sqrt(s);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += std::pow(std::abs(x[i]), p_);
    return std::pow(s, 1.0 / p_);
}

double distance(const ComplexVector& x, const ComplexVector& y, const NormKind& norm) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("distance: dimension mismatch");
    const std::size_t n = x.dim();
    if (norm.is_sup()) {
        double m = 0.0; // track squared magnitudes, one sqrt at the end
        for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::norm(x[i] - y[i]));
        return std::sqrt(m);
    }
    const double p = norm.p();
    if (p == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::abs(x[i] - y[i]);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i] - y[i]);
        return std::sqrt(s);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::pow(std::abs(x[i] - y[i]), p);
    return std::pow(s, 1.0 / p);
}

double distance_capped(const ComplexVector& x, const ComplexVector& y, const NormKind& norm,
                       double cap) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("distance_capped: dimension mismatch");
    if (cap < 0.0) cap = 0.0;
    const std::size_t n = x.dim();
    const double inf = std::numeric_limits<double>::infinity();
    if (norm.is_sup()) {
        const double cap2 = cap * cap;
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            m = std::max(m, std::norm(x[i] - y[i]));
            if (m > cap2) return inf;
        }
        return std::sqrt(m);
    }
    const double p = norm.p();
    if (p == 2.0) {
        const double cap2 = cap * cap;
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += std::norm(x[i] - y[i]);
            if (s > cap2) return inf;
        }
        return std::sqrt(s);
    }
    if (p == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += std::abs(x[i] - y[i]);
            if (s > cap) return inf;
        }
        return s;
    }
    const double capp = std::pow(cap, p);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += std::pow(std::abs(x[i] - y[i]), p);
        if (s > capp) return inf;
    }
    return std::pow(s, 1.0 / p);
}

PointCloud::PointCloud(std::vector<ComplexVector> points, NormKind norm, std::string label)
    : points_(std::move(points)), norm_(norm), label_(std::move(label)) {
    for (const ComplexVector& p : points_)
        if (p.dim() != points_.front().dim())
            throw std::invalid_argument("PointCloud: all points must share one dimension");
}

PointCloud sample_ball(const BallSpec& spec, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_ball: count must be >= 1");
    if (!(spec.radius > 0.0)) throw std::invalid_argument("sample_ball: radius must be positive");
    const std::size_t d = spec.center.dim();
    if (d == 0) throw std::invalid_argument("sample_ball: zero-dimensional center");

    RandomStream rng(seed);
    std::vector<ComplexVector> pts;
    pts.reserve(count);
    // Rejection from the polydisc; a polydisc coordinate draw is uniform on a disc.
    const std::size_t max_draws = 2000000 + 4000 * count;
    std::size_t draws = 0;
    while (pts.size() < count) {
        if (++draws > max_draws)
            throw std::runtime_error("sample_ball: rejection sampling budget exhausted");
        std::vector<Complex> e(d);
        for (std::size_t i = 0; i < d; ++i) {
            double r = spec.radius * std::sqrt(rng.uniform());
            double a = 2.0 * std::numbers::pi * rng.uniform();
            e[i] = Complex(r * std::cos(a), r * std::sin(a));
        }
        ComplexVector offset(std::move(e));
        if (!spec.norm.is_sup() && spec.norm.norm(offset) > spec.radius) continue;
        std::vector<Complex> p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = spec.center[i] + offset[i];
        pts.emplace_back(std::move(p));
    }
    return PointCloud(std::move(pts), spec.norm);
}

PointCloud grid_segment(double a, double b, std::size_t count) {
    if (!(a < b)) throw std::invalid_argument("grid_segment: requires a < b");
    if (count < 2) throw std::invalid_argument("grid_segment: requires count >= 2");
    std::vector<ComplexVector> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double t = a + (b - a) * (static_cast<double>(i) / static_cast<double>(count - 1));
        pts.emplace_back(std::vector<Complex>{Complex(t, 0.0)});
    }
    return PointCloud(std::move(pts), NormKind::sup(), "grid");
}

} // namespace entrobox
