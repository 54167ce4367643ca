#pragma once

#include "entrobox/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace entrobox {

/// A finite set of centers plus a radius witnessing a covering of a cloud
/// (closed balls: a point is covered when its distance to some center is
/// <= radius).
struct Cover {
    std::vector<ComplexVector> centers;
    double radius = 0.0;
    NormKind norm = NormKind::sup();
};

bool verify_cover(const Cover& cover, const PointCloud& cloud, double slack = 0.0);

struct EntropyEntry {
    std::size_t n = 1;   // ball-budget index of the dyadic scale
    double lower = 0.0;  // certified lower bound on e_n
    double upper = 0.0;  // certified upper bound on e_n
    std::string method;
};

/// Per-index two-sided bounds on dyadic entropy numbers. Entries are kept
/// sorted by n with nonincreasing lower/upper columns and lower <= upper.
class EntropyProfile {
public:
    EntropyProfile() = default;
    explicit EntropyProfile(std::vector<EntropyEntry> entries);

    std::size_t size() const { return entries_.size(); }
    const EntropyEntry& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<EntropyEntry>& entries() const { return entries_; }

private:
    std::vector<EntropyEntry> entries_;
};

/// Farthest-point traversal from the lowest-index point; ties break by lowest
/// point index. radius_after[k] is the covering radius once centers
/// order[0..k] are placed, so it is nonincreasing in k.
struct FarthestPointSequence {
    std::vector<std::size_t> order;
    std::vector<double> radius_after;
};

FarthestPointSequence farthest_point_sequence(const PointCloud& cloud, std::size_t max_centers);

/// Upper-bound cover witness: centers are cloud points chosen by
/// farthest-point traversal. Empty cloud yields a cover with zero centers.
Cover greedy_cover(const PointCloud& cloud, double epsilon);

/// Minimum number of radius-epsilon balls centered at cloud points that cover
/// the cloud, by exact branch-and-bound set cover. Rejects clouds larger than
/// `limit` (callers should fall back to greedy_cover).
std::size_t exact_covering_number(const PointCloud& cloud, double epsilon, std::size_t limit = 64);

/// Size of the maximal epsilon-separated subset found by the index-order
/// greedy scan (separation is strict: pairwise distance > epsilon). Certifies
/// N(cloud, epsilon/2) >= result and N(cloud, epsilon) <= result.
std::size_t packing_number(const PointCloud& cloud, double epsilon);

struct EntropyBracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// Certified bracket for the n-th entropy number (radius needed by n balls).
/// upper is the greedy covering radius with n centers; lower is the largest
/// binary-searched r whose packing witness shows n balls of radius r cannot
/// cover. Both sides are valid against centers placed anywhere in the space.
EntropyBracket entropy_number(const PointCloud& cloud, std::size_t n);

/// Brackets for e_n = E_{2^(n-1)}, n = 1..n_max, with a final cummin pass.
EntropyProfile dyadic_entropy_profile(const PointCloud& cloud, std::size_t n_max);

struct RatioRow {
    std::size_t n = 1;       // ratio of entry n+1 against entry n
    double upper_ratio = 0.0;
    double lower_ratio = 0.0;
    bool flagged = false;    // certified ratio interval lies entirely below 1/5
};

/// Consecutive-ratio diagnostic. A row is flagged (soft warning) when
/// upper_{n+1} < lower_n / 5, i.e. the certified interval for e_{n+1}/e_n sits
/// entirely below 1/5 — impossible for a connected set.
std::vector<RatioRow> ratio_diagnostic(const EntropyProfile& profile);

} // namespace entrobox
