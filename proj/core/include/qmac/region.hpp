#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qmac/entropy.hpp"

namespace qmac {

struct RatePair {
    double r1 = 0.0;  // Alice, bits per channel use
    double r2 = 0.0;  // Bob, bits per channel use
};

// Convex polygon of achievable rate pairs: counterclockwise vertices starting
// at (0, 0), duplicates merged. Degenerate regions (a point or a segment) keep
// the same representation with fewer vertices.
struct RateRegion {
    std::vector<RatePair> vertices;
};

// 2-D convex hull by monotone chain with 1e-12 collinearity tolerance.
// Output is counterclockwise starting from the lexicographically smallest
// point, which for rate sets is (0, 0) whenever it is present.
RateRegion convex_hull(std::vector<RatePair> points);

double region_area(const RateRegion& region);

// The closed single-distribution region
//   r1 <= h_cond_alice, r2 <= h_cond_bob, r1 + r2 <= h_joint,
// returned as its corner polygon with coincident corners merged.
RateRegion pentagon(const EntropyProfile& profile);

// Product-distribution search plan for region_union. The grid walks each
// probability simplex in steps of grid_step (0 disables the grid); random
// samples are flat Dirichlet draws from the documented seeded stream.
struct SamplerPlan {
    double grid_step = 0.05;
    int random_samples = 0;
    std::optional<std::uint64_t> seed;
    // Distribution pairs that must be included in the sweep.
    std::vector<std::pair<std::vector<double>, std::vector<double>>> extra_points;
    int threads = 1;
};

// Convex hull of the union of the single-distribution regions over all
// sampled product distributions (ensemble states held fixed).
RateRegion region_union(const SignalEnsemble& e, const SamplerPlan& plan);

// Membership with each edge half-plane relaxed outward by tol. Degenerate
// regions use Euclidean distance to the point or segment.
bool contains(const RateRegion& region, const RatePair& rate, double tol);

// Blocklength-splitting combination of two achievable rate pairs.
RatePair time_share(const RatePair& a, const RatePair& b, double lambda);

}  // namespace qmac
