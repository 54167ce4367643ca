#pragma once

#include "entrobox/exactc.hpp"
#include "entrobox/geometry.hpp"
#include "entrobox/monomial.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace entrobox {

namespace detail {
inline bool coeff_is_zero(const std::complex<double>& c) {
    return c.real() == 0.0 && c.imag() == 0.0;
}
inline bool coeff_is_zero(const ExactComplex& c) { return c.is_zero(); }
inline std::complex<double> coeff_times_uint(const std::complex<double>& c, std::uint32_t k) {
    return c * static_cast<double>(k);
}
inline ExactComplex coeff_times_uint(const ExactComplex& c, std::uint32_t k) {
    return c * ExactComplex(static_cast<long>(k));
}
inline std::complex<double> coeff_to_numeric(const std::complex<double>& c) { return c; }
inline std::complex<double> coeff_to_numeric(const ExactComplex& c) { return c.to_complex(); }
} // namespace detail

/// Homogeneous polynomial C^N -> C of fixed degree, stored as a finite
/// association multi-index -> coefficient with no explicit zeros.
template <class Coeff>
class HomogeneousPoly {
public:
    HomogeneousPoly() = default;
    HomogeneousPoly(std::size_t nvars, std::uint32_t degree) : nvars_(nvars), degree_(degree) {}

    static HomogeneousPoly monomial(std::size_t nvars, MultiIndex mi, Coeff c) {
        HomogeneousPoly p(nvars, mi.degree());
        p.add_term(std::move(mi), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    std::uint32_t degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t nterms() const { return coeffs_.size(); }
    const std::map<MultiIndex, Coeff, MonomialLess>& terms() const { return coeffs_; }

    Coeff coefficient(const MultiIndex& mi) const {
        auto it = coeffs_.find(mi);
        return it == coeffs_.end() ? Coeff{} : it->second;
    }

    void add_term(MultiIndex mi, Coeff c) {
        if (mi.nvars() != nvars_)
            throw std::invalid_argument("HomogeneousPoly: multi-index arity mismatch");
        if (mi.degree() != degree_)
            throw std::invalid_argument("HomogeneousPoly: term degree mismatch");
        if (detail::coeff_is_zero(c)) return;
        auto it = coeffs_.find(mi);
        if (it == coeffs_.end()) {
            coeffs_.emplace(std::move(mi), std::move(c));
        } else {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) coeffs_.erase(it);
        }
    }

    std::complex<double> evaluate(const ComplexVector& z) const {
        if (z.dim() != nvars_)
            throw std::invalid_argument("HomogeneousPoly: evaluation dimension mismatch");
        std::complex<double> acc = 0.0;
        for (const auto& [mi, c] : coeffs_) {
            std::complex<double> t = detail::coeff_to_numeric(c);
            for (std::size_t v = 0; v < nvars_; ++v)
                for (std::uint32_t e = 0; e < mi[v]; ++e) t *= z[v];
            acc += t;
        }
        return acc;
    }

    HomogeneousPoly derivative(std::size_t var) const {
        if (var >= nvars_) throw std::invalid_argument("HomogeneousPoly: variable out of range");
        HomogeneousPoly out(nvars_, degree_ == 0 ? 0 : degree_ - 1);
        for (const auto& [mi, c] : coeffs_) {
            if (mi[var] == 0) continue;
            MultiIndex d = mi;
            d[var] -= 1;
            out.add_term(std::move(d), detail::coeff_times_uint(c, mi[var]));
        }
        return out;
    }

    HomogeneousPoly times_monomial(const MultiIndex& mi) const {
        HomogeneousPoly out(nvars_, degree_ + mi.degree());
        for (const auto& [a, c] : coeffs_) out.add_term(a.plus(mi), c);
        return out;
    }

    HomogeneousPoly permuted_variables(const std::vector<std::size_t>& var_of_slot) const {
        HomogeneousPoly out(nvars_, degree_);
        for (const auto& [a, c] : coeffs_) out.add_term(a.permuted(var_of_slot), c);
        return out;
    }

    friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_)
            throw std::invalid_argument("HomogeneousPoly: shape mismatch in +");
        HomogeneousPoly out = a;
        for (const auto& [mi, c] : b.coeffs_) out.add_term(mi, c);
        return out;
    }

    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        if (a.nvars_ != b.nvars_)
            throw std::invalid_argument("HomogeneousPoly: nvars mismatch in *");
        HomogeneousPoly out(a.nvars_, a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.coeffs_)
            for (const auto& [mb, cb] : b.coeffs_) out.add_term(ma.plus(mb), ca * cb);
        return out;
    }

    HomogeneousPoly scaled(const Coeff& s) const {
        HomogeneousPoly out(nvars_, degree_);
        for (const auto& [mi, c] : coeffs_) out.add_term(mi, c * s);
        return out;
    }

    HomogeneousPoly<std::complex<double>> to_numeric() const {
        HomogeneousPoly<std::complex<double>> out(nvars_, degree_);
        for (const auto& [mi, c] : coeffs_) out.add_term(mi, detail::coeff_to_numeric(c));
        return out;
    }

    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t nvars_ = 0;
    std::uint32_t degree_ = 0;
    std::map<MultiIndex, Coeff, MonomialLess> coeffs_;
};

using NumericPoly = HomogeneousPoly<std::complex<double>>;
using ExactPoly = HomogeneousPoly<ExactComplex>;

template <class Coeff>
struct PolyMatrixT {
    std::size_t rows = 0, cols = 0;
    std::vector<HomogeneousPoly<Coeff>> entries;

    const HomogeneousPoly<Coeff>& at(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
    HomogeneousPoly<Coeff>& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

using ExactPolyMatrix = PolyMatrixT<ExactComplex>;
using NumericPolyMatrix = PolyMatrixT<std::complex<double>>;

/// r x N matrix of partial derivatives of r same-shape polynomials.
template <class Coeff>
PolyMatrixT<Coeff> jacobian(const std::vector<HomogeneousPoly<Coeff>>& polys) {
    if (polys.empty()) throw std::invalid_argument("jacobian: empty family");
    const std::size_t n = polys.front().nvars();
    const std::uint32_t m = polys.front().degree();
    for (const auto& p : polys)
        if (p.nvars() != n || p.degree() != m)
            throw std::invalid_argument("jacobian: family must share nvars and degree");
    PolyMatrixT<Coeff> out;
    out.rows = polys.size();
    out.cols = n;
    out.entries.reserve(out.rows * out.cols);
    for (const auto& p : polys)
        for (std::size_t j = 0; j < n; ++j) out.entries.push_back(p.derivative(j));
    return out;
}

/// Exact symbolic determinant of the selected square submatrix (row/column
/// index sets in increasing order), by Leibniz expansion.
ExactPoly poly_minor(const ExactPolyMatrix& mat, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols);

/// Euler identity residual sum_j z_j dP/dz_j - m P (identically zero for any
/// well-formed homogeneous polynomial).
ExactPoly euler_residual(const ExactPoly& p);

/// Text format: exact-rational terms "coeff * z1^a1 z2^a2" joined by " + ".
std::string to_text(const ExactPoly& p);
ExactPoly parse_poly(const std::string& text, std::size_t nvars, std::uint32_t degree);

} // namespace entrobox
