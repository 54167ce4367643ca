#include "entrobox/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace entrobox {

namespace {

void check_radius(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("sampler: radius must be positive");
}

void check_offset(const HoloSampler& f, const ComplexVector& u) {
    if (u.dim() != f.domain_dim)
        throw std::invalid_argument("sampler: offset dimension mismatch");
    if (f.domain_norm.norm(u) > f.radius * (1.0 + 1e-12))
        throw std::domain_error("sampler: offset outside the declared ball");
}

// Circle-direction Lipschitz bound for a coordinate z^k on |z| <= R: the chord
// |e^(ik t0) - e^(ik t1)| stretches by at most k, so the slope is k R^k.
double power_block_bound(std::size_t max_power, double radius) {
    double best = 0.0;
    for (std::size_t k = 1; k <= max_power; ++k)
        best = std::max(best, static_cast<double>(k) * std::pow(radius, static_cast<double>(k)));
    return best;
}

} // namespace

HoloSampler make_power_curve(std::size_t degree, double radius) {
    if (degree < 1) throw std::invalid_argument("power-curve: degree must be >= 1");
    check_radius(radius);
    HoloSampler f;
    f.name = "power-curve";
    f.domain_dim = 1;
    f.codomain_dim = degree;
    f.radius = radius;
    f.center = ComplexVector::zero(1);
    f.deriv_bound = power_block_bound(degree, radius);
    f.evaluate = [f_static = f](const ComplexVector& u) {
        check_offset(f_static, u);
        Complex z = u[0];
        std::vector<Complex> out(f_static.codomain_dim);
        Complex acc = 1.0;
        for (std::size_t k = 0; k < f_static.codomain_dim; ++k) {
            acc *= z;
            out[k] = acc;
        }
        return ComplexVector(std::move(out));
    };
    return f;
}

HoloSampler make_entire_exp(std::size_t terms, double radius) {
    if (terms < 1) throw std::invalid_argument("entire-exp: terms must be >= 1");
    check_radius(radius);
    HoloSampler f;
    f.name = "entire-exp";
    f.domain_dim = 1;
    f.codomain_dim = terms;
    f.radius = radius;
    f.center = ComplexVector::zero(1);
    double bound = 0.0;
    double fact = 1.0; // (k-1)!
    for (std::size_t k = 1; k <= terms; ++k) {
        bound = std::max(bound, std::pow(radius, static_cast<double>(k)) / fact);
        fact *= static_cast<double>(k);
    }
    f.deriv_bound = bound;
    f.evaluate = [f_static = f](const ComplexVector& u) {
        check_offset(f_static, u);
        Complex z = u[0];
        std::vector<Complex> out(f_static.codomain_dim);
        Complex acc = 1.0;
        double fact = 1.0;
        for (std::size_t k = 0; k < f_static.codomain_dim; ++k) {
            acc *= z;
            fact *= static_cast<double>(k + 1);
            out[k] = acc / fact;
        }
        return ComplexVector(std::move(out));
    };
    return f;
}

HoloSampler make_coordinate_powers(std::size_t dim, double radius) {
    if (dim < 1) throw std::invalid_argument("coordinate-powers: dim must be >= 1");
    check_radius(radius);
    HoloSampler f;
    f.name = "coordinate-powers";
    f.domain_dim = dim;
    f.codomain_dim = dim;
    f.radius = radius;
    f.center = ComplexVector::zero(dim);
    f.deriv_bound = power_block_bound(dim, radius);
    f.evaluate = [f_static = f](const ComplexVector& u) {
        check_offset(f_static, u);
        std::vector<Complex> out(f_static.codomain_dim);
        for (std::size_t k = 0; k < f_static.codomain_dim; ++k) {
            Complex acc = 1.0;
            for (std::size_t e = 0; e <= k; ++e) acc *= u[k];
            out[k] = acc;
        }
        return ComplexVector(std::move(out));
    };
    return f;
}

HoloSampler make_sigma_powers(std::size_t N_max, double radius) {
    check_radius(radius);
    SigmaPartition part = build_sigma_partition(N_max);
    std::size_t dim = 0;
    for (const auto& b : part.blocks) dim += b.size;

    HoloSampler f;
    f.name = "sigma-powers";
    f.domain_dim = dim;
    f.codomain_dim = dim;
    f.radius = radius;
    f.center = ComplexVector::zero(dim);
    f.deriv_bound = power_block_bound(N_max, radius);
    std::vector<std::uint32_t> power_of_coord(dim);
    for (const auto& b : part.blocks)
        for (std::size_t k = 0; k < b.size; ++k)
            power_of_coord[b.start - 1 + k] = static_cast<std::uint32_t>(b.N);
    f.evaluate = [f_static = f, power_of_coord](const ComplexVector& u) {
        check_offset(f_static, u);
        std::vector<Complex> out(f_static.codomain_dim);
        for (std::size_t k = 0; k < f_static.codomain_dim; ++k) {
            Complex acc = 1.0;
            for (std::uint32_t e = 0; e < power_of_coord[k]; ++e) acc *= u[k];
            out[k] = acc;
        }
        return ComplexVector(std::move(out));
    };
    return f;
}

HoloSampler make_sampler(const std::string& name, std::size_t size, double radius) {
    if (name == "power-curve") return make_power_curve(size, radius);
    if (name == "entire-exp") return make_entire_exp(size, radius);
    if (name == "coordinate-powers") return make_coordinate_powers(size, radius);
    if (name == "sigma-powers") return make_sigma_powers(size, radius);
    throw std::invalid_argument("unknown sampler '" + name + "'");
}

std::vector<std::string> sampler_names() {
    return {"power-curve", "entire-exp", "coordinate-powers", "sigma-powers"};
}

} // namespace entrobox
