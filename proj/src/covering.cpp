#include "entrobox/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace entrobox {

namespace {

// Width at which radius binary searches stop, relative to a diameter proxy.
constexpr double kRadiusSearchRel = 1e-9;

double diameter_proxy(const PointCloud& cloud) {
    // max distance from point 0 lies in [diam/2, diam].
    if (cloud.size() < 2) return 0.0;
    double m = 0.0;
    for (std::size_t i = 1; i < cloud.size(); ++i)
        m = std::max(m, distance(cloud[0], cloud[i], cloud.norm()));
    return m;
}

// True iff the cloud contains > n points with pairwise distance > eps
// (index-order greedy with early exit once n+1 points are kept).
bool packing_exceeds(const PointCloud& cloud, double eps, std::size_t n) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        bool far = true;
        for (std::size_t k : kept) {
            if (distance_capped(cloud[i], cloud[k], cloud.norm(), eps) <= eps) {
                far = false;
                break;
            }
        }
        if (far) {
            kept.push_back(i);
            if (kept.size() > n) return true;
        }
    }
    return false;
}

} // namespace

bool verify_cover(const Cover& cover, const PointCloud& cloud, double slack) {
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        bool hit = false;
        for (const ComplexVector& c : cover.centers) {
            if (distance_capped(cloud[i], c, cover.norm, cover.radius + slack) <=
                cover.radius + slack) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

EntropyProfile::EntropyProfile(std::vector<EntropyEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const EntropyEntry& e = entries_[i];
        if (e.lower > e.upper)
            throw std::invalid_argument("EntropyProfile: lower > upper at an entry");
        if (i > 0) {
            if (entries_[i - 1].n >= e.n)
                throw std::invalid_argument("EntropyProfile: indices must increase");
            if (e.upper > entries_[i - 1].upper || e.lower > entries_[i - 1].lower)
                throw std::invalid_argument("EntropyProfile: bounds must be nonincreasing");
        }
    }
}

FarthestPointSequence farthest_point_sequence(const PointCloud& cloud, std::size_t max_centers) {
    FarthestPointSequence fps;
    if (cloud.empty() || max_centers == 0) return fps;

    std::vector<double> dist(cloud.size(), std::numeric_limits<double>::infinity());
    std::size_t next = 0; // lowest index first
    while (fps.order.size() < std::min(max_centers, cloud.size())) {
        fps.order.push_back(next);
        const ComplexVector& c = cloud[next];
        double worst = 0.0;
        std::size_t worst_idx = 0;
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            double d = distance_capped(cloud[i], c, cloud.norm(), dist[i]);
            if (d < dist[i]) dist[i] = d;
            if (dist[i] > worst) { // strict: ties keep the lowest index
                worst = dist[i];
                worst_idx = i;
            }
        }
        fps.radius_after.push_back(worst);
        if (worst == 0.0) break;
        next = worst_idx;
    }
    return fps;
}

Cover greedy_cover(const PointCloud& cloud, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("greedy_cover: epsilon must be positive");
    Cover cover;
    cover.radius = epsilon;
    cover.norm = cloud.norm();
    if (cloud.empty()) return cover;

    FarthestPointSequence fps = farthest_point_sequence(cloud, cloud.size());
    for (std::size_t k = 0; k < fps.order.size(); ++k) {
        cover.centers.push_back(cloud[fps.order[k]]);
        if (fps.radius_after[k] <= epsilon) break;
    }
    return cover;
}

namespace {

// Multiword bitmask over cloud indices.
struct Mask {
    std::vector<std::uint64_t> w;
    explicit Mask(std::size_t bits) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool covers(const Mask& other) const { // other subset of this
        for (std::size_t k = 0; k < w.size(); ++k)
            if ((other.w[k] & ~w[k]) != 0) return false;
        return true;
    }
};

struct SetCoverSearch {
    std::size_t npoints = 0;
    std::vector<Mask> sets;              // candidate balls (deduplicated)
    std::vector<std::size_t> set_sizes;
    std::size_t best = 0;

    bool all_covered(const Mask& covered) const {
        for (std::size_t i = 0; i < npoints; ++i)
            if (((covered.w[i / 64] >> (i % 64)) & 1) == 0) return false;
        return true;
    }

    std::size_t first_uncovered_with_fewest_options(const Mask& covered) const {
        std::size_t best_i = npoints;
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < npoints; ++i) {
            if ((covered.w[i / 64] >> (i % 64)) & 1) continue;
            std::size_t count = 0;
            for (const Mask& s : sets)
                if ((s.w[i / 64] >> (i % 64)) & 1) ++count;
            if (count < best_count) {
                best_count = count;
                best_i = i;
            }
        }
        return best_i;
    }

    std::size_t uncovered_count(const Mask& covered) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < npoints; ++i)
            if (((covered.w[i / 64] >> (i % 64)) & 1) == 0) ++c;
        return c;
    }

    void recurse(Mask covered, std::size_t used) {
        if (used >= best) return;
        if (all_covered(covered)) {
            best = used;
            return;
        }
        std::size_t max_size = 0;
        for (std::size_t s = 0; s < sets.size(); ++s) max_size = std::max(max_size, set_sizes[s]);
        if (max_size == 0) return;
        std::size_t lb = (uncovered_count(covered) + max_size - 1) / max_size;
        if (used + lb >= best) return;

        std::size_t pivot = first_uncovered_with_fewest_options(covered);
        // Candidates covering the pivot, largest coverage first, index ties low-first.
        std::vector<std::size_t> cands;
        for (std::size_t s = 0; s < sets.size(); ++s)
            if ((sets[s].w[pivot / 64] >> (pivot % 64)) & 1) cands.push_back(s);
        std::stable_sort(cands.begin(), cands.end(), [&](std::size_t a, std::size_t b) {
            return set_sizes[a] > set_sizes[b];
        });
        for (std::size_t s : cands) {
            Mask next = covered;
            for (std::size_t k = 0; k < next.w.size(); ++k) next.w[k] |= sets[s].w[k];
            recurse(std::move(next), used + 1);
        }
    }
};

} // namespace

std::size_t exact_covering_number(const PointCloud& cloud, double epsilon, std::size_t limit) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("exact_covering_number: epsilon must be positive");
    if (cloud.size() > limit)
        throw std::invalid_argument(
            "exact_covering_number: cloud exceeds the exact-search size limit; use greedy_cover");
    if (cloud.empty()) return 0;

    const std::size_t n = cloud.size();
    SetCoverSearch search;
    search.npoints = n;
    for (std::size_t c = 0; c < n; ++c) {
        Mask m(n);
        for (std::size_t i = 0; i < n; ++i)
            if (distance_capped(cloud[i], cloud[c], cloud.norm(), epsilon) <= epsilon) m.set(i);
        bool dominated = false;
        for (const Mask& s : search.sets)
            if (s.covers(m)) { // m adds nothing a kept set does not cover
                dominated = true;
                break;
            }
        if (!dominated) search.sets.push_back(std::move(m));
    }
    search.set_sizes.resize(search.sets.size());
    for (std::size_t s = 0; s < search.sets.size(); ++s) {
        std::size_t count = 0;
        for (std::uint64_t word : search.sets[s].w) count += std::popcount(word);
        search.set_sizes[s] = count;
    }

    // Greedy initial upper bound.
    {
        Mask covered(n);
        std::size_t used = 0;
        while (!search.all_covered(covered)) {
            std::size_t best_s = 0, best_gain = 0;
            for (std::size_t s = 0; s < search.sets.size(); ++s) {
                std::size_t gain = 0;
                for (std::size_t k = 0; k < covered.w.size(); ++k)
                    gain += std::popcount(search.sets[s].w[k] & ~covered.w[k]);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_s = s;
                }
            }
            for (std::size_t k = 0; k < covered.w.size(); ++k)
                covered.w[k] |= search.sets[best_s].w[k];
            ++used;
        }
        search.best = used;
    }

    search.recurse(Mask(n), 0);
    return search.best;
}

std::size_t packing_number(const PointCloud& cloud, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("packing_number: epsilon must be positive");
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        bool far = true;
        for (std::size_t k : kept) {
            if (distance_capped(cloud[i], cloud[k], cloud.norm(), epsilon) <= epsilon) {
                far = false;
                break;
            }
        }
        if (far) kept.push_back(i);
    }
    return kept.size();
}

EntropyBracket entropy_number(const PointCloud& cloud, std::size_t n) {
    if (n < 1) throw std::invalid_argument("entropy_number: n must be >= 1");
    EntropyBracket bracket;
    if (cloud.size() <= n) return bracket; // n balls of radius 0 suffice

    FarthestPointSequence fps = farthest_point_sequence(cloud, n);
    bracket.upper = fps.radius_after.size() >= n ? fps.radius_after[n - 1] : 0.0;

    // lower: largest r with a (2r)-separated witness of n+1 points.
    double proxy = std::max(diameter_proxy(cloud), bracket.upper);
    if (proxy == 0.0) return bracket;
    double tol = kRadiusSearchRel * proxy;
    double lo = 0.0, hi = bracket.upper * (1.0 + 1e-12) + tol;
    if (!packing_exceeds(cloud, 2.0 * lo, n)) return bracket; // fewer than n+1 distinct points
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (packing_exceeds(cloud, 2.0 * mid, n))
            lo = mid;
        else
            hi = mid;
    }
    bracket.lower = std::min(lo, bracket.upper);
    return bracket;
}

EntropyProfile dyadic_entropy_profile(const PointCloud& cloud, std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("dyadic_entropy_profile: n_max must be >= 1");
    if (n_max > 40) throw std::invalid_argument("dyadic_entropy_profile: n_max too large");

    std::vector<EntropyEntry> entries;
    entries.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::size_t balls = std::size_t{1} << (n - 1);
        EntropyBracket b = entropy_number(cloud, balls);
        entries.push_back({n, b.lower, b.upper, "bracket[greedy-fps+packing]"});
    }
    // cummin pass: brackets at a larger budget can never exceed earlier ones.
    for (std::size_t i = 1; i < entries.size(); ++i) {
        entries[i].upper = std::min(entries[i].upper, entries[i - 1].upper);
        entries[i].lower = std::min(entries[i].lower, entries[i - 1].lower);
        entries[i].lower = std::min(entries[i].lower, entries[i].upper);
    }
    return EntropyProfile(std::move(entries));
}

std::vector<RatioRow> ratio_diagnostic(const EntropyProfile& profile) {
    if (profile.size() < 2)
        throw std::invalid_argument("ratio_diagnostic: profile needs at least 2 entries");
    auto safe_ratio = [](double num, double den) {
        if (den > 0.0) return num / den;
        return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    };
    std::vector<RatioRow> rows;
    for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
        const EntropyEntry& a = profile[i];
        const EntropyEntry& b = profile[i + 1];
        RatioRow row;
        row.n = a.n;
        row.upper_ratio = safe_ratio(b.upper, a.upper);
        row.lower_ratio = safe_ratio(b.lower, a.lower);
        row.flagged = a.lower > 0.0 && b.upper < a.lower / 5.0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace entrobox
