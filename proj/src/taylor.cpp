#include "entrobox/taylor.hpp"

#include "entrobox/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace entrobox {

namespace {

constexpr double kQuadratureTol = 1e-12;
constexpr std::size_t kNodeCap = 1 << 16;

ComplexVector scaled_vec(const ComplexVector& x, Complex s) {
    std::vector<Complex> e(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) e[i] = s * x[i];
    return ComplexVector(std::move(e));
}

// Trapezoid sum (1/K) sum_k f(e^(i t_k) x) e^(-i m t_k) from cached circle
// evaluations.
ComplexVector average_with_phase(const std::vector<ComplexVector>& values, std::uint32_t m,
                                 std::size_t codomain_dim) {
    const std::size_t K = values.size();
    std::vector<Complex> acc(codomain_dim, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < K; ++k) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(K);
        Complex phase = std::polar(1.0, -static_cast<double>(m) * t);
        for (std::size_t i = 0; i < codomain_dim; ++i) acc[i] += values[k][i] * phase;
    }
    for (Complex& c : acc) c /= static_cast<double>(K);
    return ComplexVector(std::move(acc));
}

} // namespace

ComplexVector taylor_coefficient(const HoloSampler& f, std::uint32_t m, const ComplexVector& x,
                                 std::size_t nodes) {
    if (x.dim() != f.domain_dim)
        throw std::invalid_argument("taylor_coefficient: argument dimension mismatch");
    if (!(f.domain_norm.norm(x) < f.radius))
        throw std::domain_error("taylor_coefficient: ||x|| must be < radius");

    std::size_t K = std::max<std::size_t>({nodes, m + 2, 16});
    // Power of two so each doubling reuses previous circle evaluations.
    std::size_t rounded = 1;
    while (rounded < K) rounded <<= 1;
    K = rounded;

    std::vector<ComplexVector> values(K);
    auto eval_circle = [&](std::size_t k, std::size_t total) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(total);
        return f.evaluate(scaled_vec(x, std::polar(1.0, t)));
    };
    for (std::size_t k = 0; k < K; ++k) values[k] = eval_circle(k, K);
    ComplexVector current = average_with_phase(values, m, f.codomain_dim);

    double delta = std::numeric_limits<double>::infinity();
    while (K < kNodeCap) {
        std::size_t K2 = 2 * K;
        std::vector<ComplexVector> doubled(K2);
        for (std::size_t k = 0; k < K; ++k) doubled[2 * k] = std::move(values[k]);
        for (std::size_t k = 0; k < K; ++k) doubled[2 * k + 1] = eval_circle(2 * k + 1, K2);
        ComplexVector refined = average_with_phase(doubled, m, f.codomain_dim);

        std::vector<Complex> diff(f.codomain_dim);
        for (std::size_t i = 0; i < f.codomain_dim; ++i) diff[i] = refined[i] - current[i];
        delta = f.codomain_norm.norm(ComplexVector(std::move(diff)));

        values = std::move(doubled);
        current = std::move(refined);
        K = K2;
        if (delta < kQuadratureTol) return current;
    }
    throw std::runtime_error("taylor_coefficient: quadrature did not converge (last delta " +
                             std::to_string(delta) + ")");
}

PointCloud image_cloud(const HoloSampler& f, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("image_cloud: count must be >= 1");
    BallSpec ball{ComplexVector::zero(f.domain_dim), f.radius, f.domain_norm};
    PointCloud offsets = sample_ball(ball, count, seed);
    std::vector<ComplexVector> images;
    images.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ComplexVector y = f.evaluate(offsets[i]);
        if (y.dim() != f.codomain_dim)
            throw std::runtime_error("image_cloud: evaluator codomain mismatch");
        images.push_back(std::move(y));
    }
    return PointCloud(std::move(images), f.codomain_norm, f.name);
}

double lipschitz_probe(const HoloSampler& f, std::size_t samples, std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("lipschitz_probe: samples must be >= 2");
    BallSpec ball{ComplexVector::zero(f.domain_dim), f.radius, f.domain_norm};
    PointCloud xs = sample_ball(ball, samples, seed);
    RandomStream rng(seed ^ 0x9e3779b97f4a7c15ull);
    double best = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        double t0 = 2.0 * std::numbers::pi * rng.uniform();
        double t1 = 2.0 * std::numbers::pi * rng.uniform();
        Complex u0 = std::polar(1.0, t0);
        Complex u1 = std::polar(1.0, t1);
        double denom = std::abs(u0 - u1);
        if (denom < 1e-9) continue;
        ComplexVector a = f.evaluate(scaled_vec(xs[i], u0));
        ComplexVector b = f.evaluate(scaled_vec(xs[i], u1));
        best = std::max(best, distance(a, b, f.codomain_norm) / denom);
    }
    return best;
}

TransferPlan transfer_entropy_bound(std::size_t n, double e_n_upper, double deriv_bound) {
    if (n < 1) throw std::invalid_argument("transfer_entropy_bound: n must be >= 1");
    if (!(e_n_upper > 0.0))
        throw std::invalid_argument("transfer_entropy_bound: bound must be positive");
    TransferPlan plan;
    plan.n = n;
    plan.net.radius = e_n_upper;
    plan.C_n = static_cast<std::size_t>(
        std::ceil(2.0 * std::numbers::pi * deriv_bound / e_n_upper));
    plan.C_n = std::max<std::size_t>(plan.C_n, 1);
    plan.target_index = (n - 1) * plan.C_n + 1;
    plan.guarantee = 2.0 * e_n_upper;
    return plan;
}

TransferPlan make_transfer_plan(std::size_t n, Cover net, double deriv_bound) {
    TransferPlan plan = transfer_entropy_bound(n, net.radius, deriv_bound);
    plan.net = std::move(net);
    return plan;
}

std::vector<TransferWitness> transfer_witness_multi(const HoloSampler& f,
                                                    const TransferPlan& plan,
                                                    std::span<const std::uint32_t> ms,
                                                    const ComplexVector& x) {
    if (plan.net.centers.empty())
        throw std::invalid_argument("transfer_witness: plan carries an empty net");
    if (!(f.domain_norm.norm(x) < f.radius))
        throw std::domain_error("transfer_witness: ||x|| must be < radius");

    const std::size_t C_n = plan.C_n;
    // One net lookup per arc, shared across the requested degrees.
    std::vector<std::size_t> chosen(C_n);
    for (std::size_t j = 0; j < C_n; ++j) {
        double mid = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) /
                     static_cast<double>(C_n);
        ComplexVector fx = f.evaluate(scaled_vec(x, std::polar(1.0, mid)));
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < plan.net.centers.size(); ++c) {
            double d = distance_capped(fx, plan.net.centers[c], plan.net.norm, best_d);
            if (d < best_d) { // ties keep the lowest index
                best_d = d;
                best = c;
            }
        }
        chosen[j] = best;
    }

    std::vector<TransferWitness> out;
    out.reserve(ms.size());
    for (std::uint32_t m : ms) {
        std::vector<Complex> acc(f.codomain_dim, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < C_n; ++j) {
            double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(C_n);
            double b = 2.0 * std::numbers::pi * static_cast<double>(j + 1) /
                       static_cast<double>(C_n);
            Complex weight;
            if (m == 0) {
                weight = Complex((b - a) / (2.0 * std::numbers::pi), 0.0);
            } else {
                // (1/2pi) integral_a^b e^(-imt) dt in closed form.
                Complex im_m(0.0, static_cast<double>(m));
                weight = (std::exp(-im_m * a) - std::exp(-im_m * b)) /
                         (im_m * 2.0 * std::numbers::pi);
            }
            const ComplexVector& z = plan.net.centers[chosen[j]];
            for (std::size_t i = 0; i < f.codomain_dim; ++i) acc[i] += weight * z[i];
        }
        TransferWitness w;
        w.y = ComplexVector(std::move(acc));
        ComplexVector truth = taylor_coefficient(f, m, x);
        w.error = distance(w.y, truth, f.codomain_norm);
        w.pass = w.error <= plan.guarantee;
        out.push_back(std::move(w));
    }
    return out;
}

TransferWitness transfer_witness(const HoloSampler& f, const TransferPlan& plan, std::uint32_t m,
                                 const ComplexVector& x) {
    std::uint32_t ms[1] = {m};
    return transfer_witness_multi(f, plan, ms, x).front();
}

SummabilityReport summability_diagnostic(const EntropyProfile& profile, double p) {
    if (profile.size() == 0)
        throw std::invalid_argument("summability_diagnostic: empty profile");
    if (!(p >= 1.0)) throw std::invalid_argument("summability_diagnostic: requires p >= 1");

    const std::size_t K = profile.size();
    std::vector<double> terms(K);
    for (std::size_t k = 0; k < K; ++k) {
        double gap = k + 1 < K
                         ? static_cast<double>(profile[k + 1].n - profile[k].n)
                         : 1.0;
        terms[k] = gap * std::pow(profile[k].upper, p);
    }
    SummabilityReport rep;
    rep.partial_sums.resize(K);
    double acc = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        acc += terms[k];
        rep.partial_sums[k] = acc;
    }

    // The final entry's forward gap is unknown (its weight defaults to 1), so
    // verdicts are judged on ratios between fully-weighted terms only.
    const std::size_t usable = K >= 2 ? K - 1 : 0; // terms 0..K-2
    const std::size_t window = std::min<std::size_t>(5, usable >= 2 ? usable - 1 : 0);
    bool all_below = window > 0;
    bool all_growing = window > 0;
    rep.ratio_tail = 0.0;
    for (std::size_t k = usable - 1 - window; window > 0 && k + 1 < usable; ++k) {
        double ratio = terms[k] > 0.0
                           ? terms[k + 1] / terms[k]
                           : (terms[k + 1] > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        rep.ratio_tail = std::max(rep.ratio_tail, ratio);
        if (!(ratio < 0.99)) all_below = false;
        if (!(terms[k + 1] >= terms[k] && terms[k + 1] > 0.0)) all_growing = false;
    }
    if (acc == 0.0) {
        rep.verdict = SummabilityVerdict::SummableConsistent; // nothing to sum
    } else if (window == 0) {
        rep.verdict = SummabilityVerdict::Inconclusive;
    } else if (all_below && p > 1.0) {
        rep.verdict = SummabilityVerdict::SummableConsistent;
    } else if (all_growing) {
        rep.verdict = SummabilityVerdict::DivergentConsistent;
    } else {
        rep.verdict = SummabilityVerdict::Inconclusive;
    }
    return rep;
}

const char* to_string(SummabilityVerdict v) {
    switch (v) {
    case SummabilityVerdict::SummableConsistent: return "summable-consistent";
    case SummabilityVerdict::DivergentConsistent: return "divergent-consistent";
    case SummabilityVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

} // namespace entrobox
