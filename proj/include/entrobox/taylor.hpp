#pragma once

#include "entrobox/covering.hpp"
#include "entrobox/geometry.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace entrobox {

/// Black-box evaluation contract for a holomorphic map on a ball: `evaluate`
/// maps an offset u with ||u||_domain <= radius to f(center + u). It must be
/// deterministic and re-entrant. `deriv_bound` is caller-supplied metadata: an
/// upper bound on the circle-direction Lipschitz constant
/// ||f(c + e^(it0) x) - f(c + e^(it1) x)|| <= deriv_bound |e^(it0) - e^(it1)|,
/// cross-checkable with lipschitz_probe.
struct HoloSampler {
    std::function<ComplexVector(const ComplexVector&)> evaluate;
    ComplexVector center;
    double radius = 1.0;
    NormKind domain_norm = NormKind::sup();
    NormKind codomain_norm = NormKind::sup();
    double deriv_bound = 1.0;
    std::size_t domain_dim = 1;
    std::size_t codomain_dim = 1;
    std::string name;
};

/// Degree-m Taylor part at the sampler's center, evaluated at x: the circle
/// average of f(center + e^(it) x) e^(-imt). Equispaced trapezoid nodes,
/// doubled until two successive levels agree to 1e-12 in the codomain norm
/// (exact once the integrand's trigonometric degree drops below the node
/// count). Throws on ||x|| >= radius and on non-convergence at 2^16 nodes.
ComplexVector taylor_coefficient(const HoloSampler& f, std::uint32_t m, const ComplexVector& x,
                                 std::size_t nodes = 0);

/// Image of a deterministic ball sample under the sampler.
PointCloud image_cloud(const HoloSampler& f, std::size_t count, std::uint64_t seed);

/// Empirical lower estimate of the circle-direction Lipschitz constant: max
/// chord slope over seeded (x, t0, t1) triples. Warnable against deriv_bound.
double lipschitz_probe(const HoloSampler& f, std::size_t samples, std::uint64_t seed);

/// Plan transferring an image net to a Taylor-part net: the circle splits into
/// C_n arcs, each contributing its nearest net center.
struct TransferPlan {
    std::size_t n = 1;          // dyadic index of the driving entropy bound
    Cover net;                  // net over the image cloud (radius e_n upper)
    std::size_t C_n = 1;        // ceil(2 pi deriv_bound / net.radius)
    std::size_t target_index = 1; // (n-1) C_n + 1
    double guarantee = 0.0;     // 2 x net.radius
};

/// Plan from the bare bound value (no materialised net).
TransferPlan transfer_entropy_bound(std::size_t n, double e_n_upper, double deriv_bound);

/// Plan from an actual net.
TransferPlan make_transfer_plan(std::size_t n, Cover net, double deriv_bound);

struct TransferWitness {
    ComplexVector y;    // net-transferred approximation of the Taylor part
    double error = 0.0; // distance to the quadrature value
    bool pass = false;  // error <= plan.guarantee
};

/// Per-point witness of the net-transfer bound: picks, for each arc, the net
/// center nearest to f at the arc midpoint and integrates e^(-imt) in closed
/// form over the arc. Requires a nonempty net.
TransferWitness transfer_witness(const HoloSampler& f, const TransferPlan& plan, std::uint32_t m,
                                 const ComplexVector& x);

/// Witnesses several degrees at once, reusing the arc center selections.
std::vector<TransferWitness> transfer_witness_multi(const HoloSampler& f,
                                                    const TransferPlan& plan,
                                                    std::span<const std::uint32_t> ms,
                                                    const ComplexVector& x);

enum class SummabilityVerdict {
    SummableConsistent,
    DivergentConsistent,
    Inconclusive,
};

struct SummabilityReport {
    std::vector<double> partial_sums; // gap-weighted partial sums of upper^p
    double ratio_tail = 0.0;          // max consecutive term ratio on the tail
    SummabilityVerdict verdict = SummabilityVerdict::Inconclusive;
};

/// Partial sums of upper_n^p weighted by index gaps (gap weighting makes
/// sparse profiles, e.g. blockwise ones, sum their implied index ranges; on
/// dense profiles the weights are all 1). Verdict: summable-consistent when
/// the last-5 term ratios stay below 0.99 and p > 1 (p = 1 summability is
/// never claimed), divergent-consistent when the tail terms are nondecreasing
/// and positive, else inconclusive.
SummabilityReport summability_diagnostic(const EntropyProfile& profile, double p);

const char* to_string(SummabilityVerdict v);

} // namespace entrobox
