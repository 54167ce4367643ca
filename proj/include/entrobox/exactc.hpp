#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>

namespace entrobox {

/// Exact element of Q(i): a pair of arbitrary-precision rationals.
class ExactComplex {
public:
    ExactComplex() : re_(0), im_(0) {}
    ExactComplex(long v) : re_(v), im_(0) {} // NOLINT(google-explicit-constructor)
    ExactComplex(mpq_class re, mpq_class im = mpq_class(0))
        : re_(std::move(re)), im_(std::move(im)) {
        // Two-argument mpq_class construction does not canonicalize.
        re_.canonicalize();
        im_.canonicalize();
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    ExactComplex operator-() const { return ExactComplex(-re_, -im_); }
    ExactComplex conj() const { return ExactComplex(re_, -im_); }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    ExactComplex inverse() const {
        mpq_class n = re_ * re_ + im_ * im_;
        if (n == 0) throw std::domain_error("ExactComplex: division by zero");
        return ExactComplex(re_ / n, -im_ / n);
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        return a * b.inverse();
    }
    ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
    ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
    ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
    mpq_class re_, im_;
};

} // namespace entrobox
