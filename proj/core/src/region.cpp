#include "qmac/region.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "qmac/errors.hpp"
#include "qmac/rng.hpp"

namespace qmac {

namespace {

constexpr double kCollinearTol = 1e-12;
constexpr double kDuplicateTol = 1e-12;

double cross(const RatePair& o, const RatePair& a, const RatePair& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

bool same_point(const RatePair& a, const RatePair& b) {
    return std::abs(a.r1 - b.r1) <= kDuplicateTol && std::abs(a.r2 - b.r2) <= kDuplicateTol;
}

double point_distance(const RatePair& a, const RatePair& b) {
    return std::hypot(a.r1 - b.r1, a.r2 - b.r2);
}

double segment_distance(const RatePair& p, const RatePair& a, const RatePair& b) {
    const double vx = b.r1 - a.r1;
    const double vy = b.r2 - a.r2;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return point_distance(p, a);
    double t = ((p.r1 - a.r1) * vx + (p.r2 - a.r2) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return point_distance(p, {a.r1 + t * vx, a.r2 + t * vy});
}

// Enumerates all probability vectors over `n` letters with entries that are
// multiples of 1/g, in lexicographic order.
void enumerate_grid(int n, int g, std::vector<std::vector<double>>& out) {
    std::vector<int> counts(static_cast<size_t>(n), 0);
    const auto emit = [&] {
        std::vector<double> probs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) probs[static_cast<size_t>(i)] = static_cast<double>(counts[static_cast<size_t>(i)]) / g;
        out.push_back(std::move(probs));
    };
    const std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == n - 1) {
            counts[static_cast<size_t>(idx)] = remaining;
            emit();
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            counts[static_cast<size_t>(idx)] = k;
            rec(idx + 1, remaining - k);
        }
    };
    rec(0, g);
}

void run_partitioned(int jobs, int threads, const std::function<void(int)>& work) {
    threads = std::max(1, std::min(threads, jobs));
    if (threads == 1) {
        for (int i = 0; i < jobs; ++i) work(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < jobs; i += threads) work(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

RateRegion convex_hull(std::vector<RatePair> points) {
    std::sort(points.begin(), points.end(), [](const RatePair& a, const RatePair& b) {
        if (a.r1 != b.r1) return a.r1 < b.r1;
        return a.r2 < b.r2;
    });
    points.erase(std::unique(points.begin(), points.end(), same_point), points.end());

    RateRegion out;
    if (points.size() <= 2) {
        out.vertices = std::move(points);
        return out;
    }

    std::vector<RatePair> hull(2 * points.size());
    size_t k = 0;
    for (const auto& p : points) {  // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= kCollinearTol) --k;
        hull[k++] = p;
    }
    const size_t lower_end = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {  // upper hull
        while (k >= lower_end && cross(hull[k - 2], hull[k - 1], *it) <= kCollinearTol) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);  // last point equals the first
    out.vertices = std::move(hull);
    return out;
}

double region_area(const RateRegion& region) {
    const auto& v = region.vertices;
    if (v.size() < 3) return 0.0;
    double twice = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        twice += a.r1 * b.r2 - b.r1 * a.r2;
    }
    return 0.5 * std::abs(twice);
}

RateRegion pentagon(const EntropyProfile& profile) {
    require_valid_profile(profile);
    const auto nonneg = [](double x) { return std::max(0.0, x); };
    const double ha = nonneg(profile.h_cond_alice);
    const double hb = nonneg(profile.h_cond_bob);
    const double h = nonneg(profile.h_joint);
    std::vector<RatePair> corners = {
        {0.0, 0.0},
        {ha, 0.0},
        {ha, nonneg(h - ha)},
        {nonneg(h - hb), hb},
        {0.0, hb},
    };
    return convex_hull(std::move(corners));
}

RateRegion region_union(const SignalEnsemble& e, const SamplerPlan& plan) {
    require_valid_ensemble(e);
    if (plan.grid_step < 0.0 || plan.grid_step > 1.0 || !std::isfinite(plan.grid_step)) {
        throw InvalidSamplerPlanError("grid_step must lie in [0, 1]");
    }
    if (plan.random_samples < 0) {
        throw InvalidSamplerPlanError("random_samples must be >= 0");
    }
    if (plan.random_samples > 0 && !plan.seed.has_value()) {
        throw InvalidSamplerPlanError("random sampling requires a seed");
    }

    std::vector<std::pair<std::vector<double>, std::vector<double>>> samples;
    samples.emplace_back(e.p, e.q);  // the ensemble's own distribution
    for (const auto& pt : plan.extra_points) {
        if (pt.first.size() != static_cast<size_t>(e.size_a()) ||
            pt.second.size() != static_cast<size_t>(e.size_b())) {
            throw InvalidSamplerPlanError("extra point has wrong alphabet size");
        }
        samples.push_back(pt);
    }
    if (plan.grid_step > 0.0) {
        const int g = std::max(1, static_cast<int>(std::lround(1.0 / plan.grid_step)));
        std::vector<std::vector<double>> grid_p, grid_q;
        enumerate_grid(e.size_a(), g, grid_p);
        enumerate_grid(e.size_b(), g, grid_q);
        for (const auto& gp : grid_p) {
            for (const auto& gq : grid_q) {
                samples.emplace_back(gp, gq);
            }
        }
    }
    for (int s = 0; s < plan.random_samples; ++s) {
        auto gen = trial_stream(*plan.seed, static_cast<std::uint64_t>(s));
        samples.emplace_back(sample_simplex(gen, e.size_a()),
                             sample_simplex(gen, e.size_b()));
    }

    const int jobs = static_cast<int>(samples.size());
    std::vector<std::vector<RatePair>> per_sample(static_cast<size_t>(jobs));
    run_partitioned(jobs, plan.threads, [&](int i) {
        SignalEnsemble variant = e;
        variant.p = samples[static_cast<size_t>(i)].first;
        variant.q = samples[static_cast<size_t>(i)].second;
        per_sample[static_cast<size_t>(i)] =
            pentagon(conditional_entropies(variant)).vertices;
    });

    std::vector<RatePair> all;
    all.push_back({0.0, 0.0});
    for (const auto& verts : per_sample) {
        all.insert(all.end(), verts.begin(), verts.end());
    }
    return convex_hull(std::move(all));
}

bool contains(const RateRegion& region, const RatePair& rate, double tol) {
    const auto& v = region.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return point_distance(rate, v[0]) <= tol;
    if (v.size() == 2) return segment_distance(rate, v[0], v[1]) <= tol;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const double edge_len = point_distance(a, b);
        if (edge_len <= kDuplicateTol) continue;
        // signed distance of rate to the directed edge a->b; negative = outside
        if (cross(a, b, rate) / edge_len < -tol) return false;
    }
    return true;
}

RatePair time_share(const RatePair& a, const RatePair& b, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw LambdaOutOfRangeError("lambda must lie in [0, 1]");
    }
    return {lambda * a.r1 + (1.0 - lambda) * b.r1,
            lambda * a.r2 + (1.0 - lambda) * b.r2};
}

}  // namespace qmac
