#include <doctest.h>

#include <cmath>
#include <vector>

#include "fcover/oracle.hpp"
#include "fcover/reach.hpp"
#include "support.hpp"

using namespace fcover;
using namespace fcover::testing;

TEST_CASE("cylinder chords") {
    const PolyCurve line{{0, 0}, {10, 0}};
    const std::vector<Point> one{{0.5, 0.5}};
    const auto d = build_cylinders(line, one, 1.0);
    REQUIRE(d.contains(0, 0));
    const Interval c = *d.chord(0, 0);
    // Independent estimate: sample the edge and keep what lies in the ball.
    double lo = 2, hi = -1;
    for (int k = 0; k <= 100000; ++k) {
        const double t = k / 100000.0;
        if (dist(line.edge(0).at(t), one[0]) <= 1.0) {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    }
    CHECK(c.lo == doctest::Approx(lo).epsilon(1e-4));
    CHECK(c.hi == doctest::Approx(hi).epsilon(1e-4));
    CHECK(c.hi == doctest::Approx((0.5 + std::sqrt(0.75)) / 10));

    const std::vector<Point> far{{5, 3}};
    CHECK(build_cylinders(line, far, 1.0).members(0).empty());

    const std::vector<Point> touching{{5, 1}};
    const auto t = build_cylinders(line, touching, 1.0);
    REQUIRE(t.contains(0, 0));
    CHECK(t.chord(0, 0)->hi - t.chord(0, 0)->lo < 1e-3);

    CHECK_THROWS_AS(build_cylinders(PolyCurve{{0, 0}}, one, 1.0), std::invalid_argument);
}

TEST_CASE("before and entirely before") {
    const PolyCurve line{{0, 0}, {10, 0}};
    // eps 1.5: a point at height h over x = c has chord [c - w, c + w] / 10, w = sqrt(2.25 - h^2).
    const std::vector<Point> pts{{2, std::sqrt(1.25)}, {3.5, 0}, {1.5, std::sqrt(2.0)}, {3.5, std::sqrt(2.0)}};
    const auto d = build_cylinders(line, pts, 1.5);
    CHECK(d.chord(0, 0)->lo == doctest::Approx(0.1));
    CHECK(d.chord(1, 0)->hi == doctest::Approx(0.5));
    CHECK(before(0, 1, 0, d));
    CHECK_FALSE(entirely_before(0, 1, 0, d));
    CHECK(before(2, 3, 0, d));
    CHECK(entirely_before(2, 3, 0, d));
    CHECK_FALSE(before(0, 0, 0, d));
    CHECK_FALSE(entirely_before(0, 0, 0, d));

    const std::vector<Point> off{{0, 0}, {5, 9}};
    const auto e = build_cylinders(line, off, 1.0);
    CHECK_THROWS_AS(before(0, 1, 0, e), std::invalid_argument);
}

TEST_CASE("direct reach") {
    const PolyCurve line{{0, 0}, {10, 0}};
    const std::vector<Point> pts{{0.5, 0.5}, {9.5, -0.5}};
    const auto d = build_cylinders(line, pts, 1.0);
    CHECK(direct_reach(d, 0, 0, 0, 0));
    CHECK(direct_reach(d, 0, 0, 1, 0));
    CHECK_FALSE(direct_reach(d, 1, 0, 0, 0));  // would walk backwards

    // The segment cuts the corner and misses the ball around (10, 0).
    const PolyCurve ell{{0, 0}, {10, 0}, {10, 10}};
    const std::vector<Point> corner{{5, 0.5}, {9.2, 5}};
    const auto c = build_cylinders(ell, corner, 1.0);
    REQUIRE(c.contains(0, 0));
    REQUIRE(c.contains(1, 1));
    CHECK_FALSE(direct_reach(c, 0, 0, 1, 1));
    CHECK_THROWS_AS(direct_reach(c, 1, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("propagation") {
    const PolyCurve line{{0, 0}, {10, 0}};
    const std::vector<Point> pts{{0.5, 0.5}, {9.5, -0.5}};
    const auto d = build_cylinders(line, pts, 1.0);
    const ReachState r = propagate(d);
    CHECK(r.set(0) == std::vector<std::size_t>{0, 1});
    CHECK(r.leftmost_entry(0) == std::optional<std::size_t>{0});
    CHECK(decide_subset(line, pts, 1.0));

    const std::vector<Point> late{{5, 0.5}, {9, 0}};
    const ReachState none = propagate(build_cylinders(line, late, 1.0));
    CHECK(none.set(0).empty());
    CHECK_FALSE(none.leftmost_entry(0));

    const PolyCurve ell{{0, 0}, {10, 0}, {10, 10}};
    const std::vector<Point> three{{0.5, 0.5}, {9.6, 0.4}, {10.5, 9.5}};
    const ReachState e = propagate(build_cylinders(ell, three, 1.0));
    CHECK(e.reachable(0));
    CHECK(e.reachable(1));
    CHECK(e.reachable(2));
    CHECK(decide_subset(ell, three, 1.0));
}

TEST_CASE("decide_subset edge cases") {
    const PolyCurve line{{0, 0}, {10, 0}};
    CHECK_FALSE(decide_subset(line, {}, 1.0));
    const PolyCurve sq{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    const std::vector<Point> own(sq.vertices().begin(), sq.vertices().end());
    CHECK(decide_subset(sq, own, 0.0));
}

TEST_CASE("every reachable node has a semi-feasible witness") {
    Rng rng(11);
    for (int t = 0; t < 150; ++t) {
        const PolyCurve curve = random_curve(rng, pick(rng, 2, 5), 6);
        std::vector<Point> pts;
        for (std::size_t k = 0, n = pick(rng, 1, 6); k < n; ++k) {
            const Segment e = curve.edge(pick(rng, 0, curve.edge_count() - 1));
            pts.push_back(e.at(uniform(rng, 0, 1)) + random_offset(rng, 1.5));
        }
        pts.push_back(curve.front() + random_offset(rng, 1.0));
        const auto d = build_cylinders(curve, pts, 1.0);
        const ReachState r = propagate(d);
        for (const auto& node : r.nodes()) {
            const PolyCurve w = r.witness(node.point, node.cylinder, pts);
            CHECK(w.back() == pts[node.point]);
            Frontier f = start_frontier(curve, w[0], 1.0);
            for (std::size_t k = 1; k < w.size(); ++k) f = advance(curve, f, w[k - 1], w[k], 1.0);
            REQUIRE(f[node.cylinder]);
            CHECK(f[node.cylinder]->contains(node.position, 1e-7));
        }
    }
}

TEST_CASE("decide_subset against enumeration over subsets") {
    Rng rng(12);
    for (int t = 0; t < 120; ++t) {
        const PolyCurve curve = random_curve(rng, pick(rng, 2, 4), 5);
        std::vector<Point> pts;
        for (std::size_t k = 0, n = pick(rng, 1, 4); k < n; ++k) {
            const Segment e = curve.edge(pick(rng, 0, curve.edge_count() - 1));
            pts.push_back(e.at(uniform(rng, 0, 1)) + random_offset(rng, 1.6));
        }
        const double eps = 1.0;
        bool any = false;
        for (unsigned mask = 1; mask < (1u << pts.size()) && !any; ++mask) {
            std::vector<Point> sub;
            for (std::size_t k = 0; k < pts.size(); ++k)
                if (mask & (1u << k)) sub.push_back(pts[k]);
            EnumerationBudget b;
            b.max_vertices = 2 * sub.size() + 2;
            any = enumerate_feasible(curve, sub, eps, b).verdict == Verdict::Feasible;
        }
        CHECK(decide_subset(curve, pts, eps) == any);
    }
}
