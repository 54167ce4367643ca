#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace entrobox {

using Complex = std::complex<double>;

/// A point of C^d. Entries must be finite.
class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::vector<Complex> entries);
    static ComplexVector zero(std::size_t dim);

    std::size_t dim() const { return entries_.size(); }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }
    Complex& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Complex>& entries() const { return entries_; }

    bool all_finite() const;

    friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

private:
    std::vector<Complex> entries_;
};

/// Which l_p norm a space carries: p in [1, inf) or the sup norm.
class NormKind {
public:
    static NormKind lp(double p);
    static NormKind sup() { return NormKind(std::numeric_limits<double>::infinity()); }
    static NormKind l1() { return lp(1.0); }
    static NormKind l2() { return lp(2.0); }

    double p() const { return p_; }
    bool is_sup() const { return p_ == std::numeric_limits<double>::infinity(); }

    double norm(const ComplexVector& x) const;

    friend bool operator==(const NormKind&, const NormKind&) = default;

private:
    explicit NormKind(double p) : p_(p) {}
    double p_ = 2.0;
};

double distance(const ComplexVector& x, const ComplexVector& y, const NormKind& norm);

/// Distance with an early-out: once the true distance provably exceeds `cap`
/// the scan stops and some value > cap is returned. Exact when the result is
/// <= cap.
double distance_capped(const ComplexVector& x, const ComplexVector& y, const NormKind& norm,
                       double cap);

/// A finite sample standing in for a bounded subset of (C^d, l_p).
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::vector<ComplexVector> points, NormKind norm, std::string label = "");

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }
    const ComplexVector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<ComplexVector>& points() const { return points_; }
    const NormKind& norm() const { return norm_; }
    const std::string& label() const { return label_; }

private:
    std::vector<ComplexVector> points_;
    NormKind norm_ = NormKind::l2();
    std::string label_;
};

struct BallSpec {
    ComplexVector center;
    double radius = 1.0;
    NormKind norm = NormKind::sup();
};

/// Deterministic sample of the closed ball. Each coordinate is drawn uniformly
/// on the disc of radius `spec.radius` (the circumscribing polydisc) and the
/// point is rejected unless it lies in the ball; for the sup norm no rejection
/// is needed.
PointCloud sample_ball(const BallSpec& spec, std::size_t count, std::uint64_t seed);

/// Equispaced real points of [a, b], embedded with zero imaginary part.
PointCloud grid_segment(double a, double b, std::size_t count);

} // namespace entrobox
