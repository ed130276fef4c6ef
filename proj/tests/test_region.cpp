#include <doctest.h>

#include "qmac/entropy.hpp"
#include "qmac/errors.hpp"
#include "qmac/region.hpp"
#include "test_support.hpp"

using namespace qmac;
using qmac::testing::classical_ensemble;
using qmac::testing::mub_ensemble;

namespace {

constexpr double kHa = 0.60087603669285616;

bool vertices_match(const RateRegion& region, const std::vector<RatePair>& want,
                    double tol) {
    if (region.vertices.size() != want.size()) return false;
    for (size_t i = 0; i < want.size(); ++i) {
        if (std::abs(region.vertices[i].r1 - want[i].r1) > tol) return false;
        if (std::abs(region.vertices[i].r2 - want[i].r2) > tol) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("region") {

TEST_CASE("convex hull basics") {
    // square plus interior and duplicate points
    RateRegion hull = convex_hull({{0.0, 0.0},
                                   {1.0, 0.0},
                                   {1.0, 1.0},
                                   {0.0, 1.0},
                                   {0.5, 0.5},
                                   {1.0, 0.0},
                                   {0.25, 0.75}});
    CHECK(vertices_match(hull, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}},
                         1e-15));
    // collinear points are merged away
    hull = convex_hull({{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {1.0, 1.0}});
    CHECK(hull.vertices.size() == 3);
    // degenerate inputs
    CHECK(convex_hull({{0.3, 0.4}, {0.3, 0.4}}).vertices.size() == 1);
    CHECK(convex_hull({{0.0, 0.0}, {1.0, 1.0}, {0.5, 0.5}}).vertices.size() == 2);
    CHECK(convex_hull({}).vertices.empty());
}

TEST_CASE("pentagon of the mixed-basis profile") {
    const RateRegion region = pentagon(conditional_entropies(mub_ensemble()));
    CHECK(vertices_match(
        region, {{0.0, 0.0}, {kHa, 0.0}, {kHa, 1.0 - kHa}, {0.0, 1.0}}, 1e-12));
    CHECK(region_area(region) ==
          doctest::Approx(0.5 * kHa * (2.0 - kHa)).epsilon(1e-12));
}

TEST_CASE("pentagon degenerates cleanly") {
    // fully classical profile: the sum constraint is slack, so a rectangle
    const RateRegion rect = pentagon({2.0, 1.0, 1.0});
    CHECK(vertices_match(rect, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}},
                         1e-15));
    CHECK(region_area(rect) == doctest::Approx(1.0).epsilon(1e-15));
    // pure-state profile: a single point
    CHECK(pentagon({0.0, 0.0, 0.0}).vertices.size() == 1);
    // sum constraint everywhere tight: a triangle
    const RateRegion tri = pentagon({1.0, 1.0, 1.0});
    CHECK(vertices_match(tri, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, 1e-15));
    CHECK(region_area(tri) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("membership testing with tolerance") {
    const RateRegion region = pentagon(conditional_entropies(mub_ensemble()));
    CHECK(contains(region, {0.3, 0.5}, 1e-6));
    CHECK_FALSE(contains(region, {0.6, 0.6}, 1e-6));
    CHECK(contains(region, {kHa, 0.2}, 1e-6));          // on the boundary
    CHECK(contains(region, {kHa + 1e-7, 0.2}, 1e-6));   // within tolerance
    CHECK_FALSE(contains(region, {kHa + 1e-5, 0.2}, 1e-6));
    CHECK(contains(region, {0.0, 0.0}, 1e-6));
    CHECK(contains(region, {0.4, 0.59}, 1e-6));

    // degenerate regions fall back to point/segment distance
    const RateRegion point = pentagon({0.0, 0.0, 0.0});
    CHECK(contains(point, {0.0, 0.0}, 1e-6));
    CHECK_FALSE(contains(point, {0.1, 0.0}, 1e-6));
    const RateRegion segment = convex_hull({{0.0, 0.0}, {1.0, 0.0}});
    CHECK(contains(segment, {0.5, 0.0}, 1e-6));
    CHECK(contains(segment, {0.5, 1e-7}, 1e-6));
    CHECK_FALSE(contains(segment, {0.5, 0.1}, 1e-6));
    CHECK_FALSE(contains(segment, {1.5, 0.0}, 1e-6));
}

TEST_CASE("time sharing interpolates linearly") {
    const RatePair mix = time_share({kHa, 1.0 - kHa}, {0.0, 1.0}, 0.25);
    CHECK(mix.r1 == doctest::Approx(0.15021900917321404).epsilon(1e-15));
    CHECK(mix.r2 == doctest::Approx(0.84978099082678593).epsilon(1e-15));
    CHECK(time_share({1.0, 0.0}, {0.0, 1.0}, 1.0).r1 == 1.0);
    CHECK(time_share({1.0, 0.0}, {0.0, 1.0}, 0.0).r1 == 0.0);
    CHECK_THROWS_AS(time_share({1.0, 0.0}, {0.0, 1.0}, -0.1), LambdaOutOfRangeError);
    CHECK_THROWS_AS(time_share({1.0, 0.0}, {0.0, 1.0}, 1.1), LambdaOutOfRangeError);

    // shared rates stay inside the union region (convexity)
    const RateRegion region = pentagon(conditional_entropies(mub_ensemble()));
    for (double lambda : {0.1, 0.5, 0.9}) {
        CHECK(contains(region, time_share({kHa, 1.0 - kHa}, {0.0, 1.0}, lambda),
                       1e-9));
    }
}

TEST_CASE("distribution sweep of the orthogonal-letters ensemble fills the unit square") {
    SamplerPlan plan;
    plan.grid_step = 0.05;
    const RateRegion region = region_union(classical_ensemble(), plan);
    CHECK(vertices_match(region,
                         {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, 1e-9));
}

TEST_CASE("single-letter alphabets give the origin") {
    SignalEnsemble e;
    e.alphabet_a = {"A"};
    e.alphabet_b = {"B"};
    e.dim = 2;
    ComplexVector v(2);
    v << 1.0, 0.0;
    e.states = {v};
    e.p = {1.0};
    e.q = {1.0};
    SamplerPlan plan;
    plan.grid_step = 0.5;
    const RateRegion region = region_union(e, plan);
    REQUIRE(region.vertices.size() == 1);
    CHECK(region.vertices[0].r1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(region.vertices[0].r2 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("sweep plans are validated") {
    const SignalEnsemble e = mub_ensemble();
    SamplerPlan plan;
    plan.grid_step = 1.5;
    CHECK_THROWS_AS(region_union(e, plan), InvalidSamplerPlanError);
    plan = {};
    plan.random_samples = -1;
    CHECK_THROWS_AS(region_union(e, plan), InvalidSamplerPlanError);
    plan = {};
    plan.random_samples = 10;  // no seed
    CHECK_THROWS_AS(region_union(e, plan), InvalidSamplerPlanError);
    plan = {};
    plan.extra_points.push_back({{0.5, 0.5, 0.0}, {0.5, 0.5}});
    CHECK_THROWS_AS(region_union(e, plan), InvalidSamplerPlanError);
    plan = {};
    plan.extra_points.push_back({{0.5, 0.5}, {0.7, 0.3}});
    CHECK_NOTHROW(region_union(e, plan));
}

TEST_CASE("random sweeps are deterministic and thread-count independent") {
    SamplerPlan plan;
    plan.grid_step = 0.25;
    plan.random_samples = 40;
    plan.seed = 99;
    const SignalEnsemble e = mub_ensemble();
    const RateRegion first = region_union(e, plan);
    const RateRegion second = region_union(e, plan);
    REQUIRE(first.vertices.size() == second.vertices.size());
    for (size_t i = 0; i < first.vertices.size(); ++i) {
        CHECK(first.vertices[i].r1 == second.vertices[i].r1);
        CHECK(first.vertices[i].r2 == second.vertices[i].r2);
    }
    plan.threads = 4;
    const RateRegion threaded = region_union(e, plan);
    REQUIRE(threaded.vertices.size() == first.vertices.size());
    for (size_t i = 0; i < first.vertices.size(); ++i) {
        CHECK(threaded.vertices[i].r1 == first.vertices[i].r1);
        CHECK(threaded.vertices[i].r2 == first.vertices[i].r2);
    }

    // the sweep can only grow the region relative to the ensemble's own profile
    const RateRegion base = pentagon(conditional_entropies(e));
    for (const RatePair& v : base.vertices) {
        CHECK(contains(first, v, 1e-9));
    }
}

}  // TEST_SUITE
