#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fcover/convex_decide.hpp"
#include "fcover/oracle.hpp"
#include "support.hpp"

using namespace fcover;
using namespace fcover::testing;

namespace {

const ConvexPolygon kSquare({{0, 0}, {10, 0}, {10, 10}, {0, 10}});

bool oracle_feasible(const ConvexPolygon& poly, const std::vector<Point>& s, double eps, std::size_t cap = 0) {
    const auto a = anchor_start(poly, s, eps);
    if (!a) return false;
    EnumerationBudget b;
    b.max_vertices = cap ? cap : default_convex_cap(s.size());
    return enumerate_feasible(boundary_curve(poly, a->x_prime), s, eps, b).verdict == Verdict::Feasible;
}

// Brute-force semi-feasible curves over S on rho, by vertex sequences of bounded length.
struct Brute {
    const ConvexInstance& inst;
    std::size_t depth;

    template <class Visit>
    void extend(const Frontier& f, std::size_t last, std::size_t left, Visit&& visit) const {
        if (left == 0) return;
        for (std::size_t v = 0; v < inst.points.size(); ++v) {
            Frontier g = advance(inst.rho, f, inst.points[last], inst.points[v], inst.eps);
            if (frontier_empty(g)) continue;
            visit(v, g);
            extend(g, v, left - 1, visit);
        }
    }

    template <class Visit>
    void from_start(Visit&& visit) const {
        for (std::size_t v = 0; v < inst.points.size(); ++v) {
            Frontier f = start_frontier(inst.rho, inst.points[v], inst.eps);
            if (frontier_empty(f)) continue;
            visit(v, f);
            extend(f, v, depth - 1, visit);
        }
    }
};

Frontier only(const Frontier& f, std::size_t i) {
    Frontier g(f.size());
    g[i] = f[i];
    return g;
}

}  // namespace

TEST_CASE("anchor") {
    const std::vector<Point> s{{-0.5, 5}, {3, 3}};
    const auto a = anchor_start(kSquare, s, 1.0);
    REQUIRE(a);
    CHECK(a->index == 0);
    CHECK(almost_equal(a->x_prime, {0, 5}));

    const std::vector<Point> inner{{5, 5}};
    CHECK_FALSE(anchor_start(kSquare, inner, 1.0));

    const std::vector<Point> on{{0, 7}, {10, 2}};
    CHECK(almost_equal(anchor_start(kSquare, on, 1.0)->x_prime, {0, 7}));

    // Ties on x go to the smaller y.
    const std::vector<Point> tie{{0, 7}, {0, 2}};
    CHECK(anchor_start(kSquare, tie, 1.0)->index == 1);
}

TEST_CASE("boundary curve") {
    const ConvexPolygon unit({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const PolyCurve from_vertex = boundary_curve(unit, {0, 0});
    CHECK(from_vertex.size() == 5);
    CHECK(from_vertex.front() == from_vertex.back());
    const PolyCurve from_mid = boundary_curve(unit, {0.5, 0});
    CHECK(from_mid.size() == 6);
    CHECK(from_mid.front() == Point{0.5, 0});
    CHECK(from_mid.back() == Point{0.5, 0});
    // Clockwise: from the bottom midpoint the next vertex is (0, 0).
    CHECK(from_mid[1] == Point{0, 0});
    CHECK_THROWS_AS(boundary_curve(unit, {0.5, 0.5}), GeometryError);
}

TEST_CASE("hull precondition") {
    std::vector<Point> offset;
    for (Point v : kSquare.vertices()) offset.push_back(v + Point{v.x > 5 ? 0.5 : -0.5, 0});
    CHECK(hull_precondition(kSquare, offset, 1.0));

    const ConvexPolygon strip({{0, 0}, {20, 0}, {20, 2}, {0, 2}});
    const std::vector<Point> corner{{0.2, 0.2}, {0.5, 0.3}, {0.3, 0.6}};
    CHECK_FALSE(hull_precondition(strip, corner, 1.0));
    CHECK_FALSE(oracle_feasible(strip, corner, 1.0));

    const std::vector<Point> single{{4, -0.2}};
    CHECK(hull_precondition(kSquare, single, 1.0));
}

TEST_CASE("hull precondition never rejects a feasible instance") {
    Rng rng(41);
    int feasible = 0;
    for (int t = 0; t < 150; ++t) {
        const ConvexPolygon poly = random_convex_polygon(rng, pick(rng, 3, 6), uniform(rng, 2, 6), uniform(rng, 2, 6));
        const auto s = points_near_boundary(rng, poly, pick(rng, 3, 5), uniform(rng, 0.3, 2));
        const double eps = uniform(rng, 0.5, 4.0);
        if (!oracle_feasible(poly, s, eps)) continue;
        ++feasible;
        CHECK(hull_precondition(poly, s, eps));
    }
    CHECK(feasible > 20);
}

TEST_CASE("reach sets and types agree with brute force") {
    Rng rng(42);
    int typed = 0;
    for (int t = 0; t < 60; ++t) {
        const ConvexPolygon poly = random_convex_polygon(rng, pick(rng, 3, 5), uniform(rng, 2, 5), uniform(rng, 1, 4));
        const auto s = points_near_boundary(rng, poly, pick(rng, 2, 4), uniform(rng, 0.3, 1.5));
        const double eps = uniform(rng, 0.6, 2.5);
        const auto a = anchor_start(poly, s, eps);
        if (!a) continue;
        const ConvexInstance inst(poly, s, eps, *a);
        const ReachState state = propagate(inst.cylinders);
        const std::size_t n = inst.cylinders.cylinder_count();
        const Brute brute{inst, s.size() + 2};

        std::vector<std::vector<bool>> reach(n, std::vector<bool>(s.size()));
        brute.from_start([&](std::size_t v, const Frontier& f) {
            for (std::size_t i = 0; i < n; ++i)
                if (f[i]) reach[i][v] = true;
        });
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t v = 0; v < s.size(); ++v)
                CHECK(reach[i][v] == state.node(v, i).has_value());

        const Classification types = classify(state, inst);
        for (const auto& node : state.nodes()) {
            const std::size_t u = node.point, i = node.cylinder;
            std::optional<std::size_t> j;
            for (std::size_t k = i + 1; k < n && !j; ++k)
                if (!state.set(k).empty()) j = k;
            bool good = false, b1 = false, b2 = false;
            brute.from_start([&](std::size_t v, const Frontier& f) {
                if (v != u || !f[i]) return;
                const Frontier g = only(f, i);
                if (!j) good = good || frontier_finished(g);
                brute.extend(g, u, s.size() + 1, [&](std::size_t w, const Frontier& h) {
                    if (!j) {
                        good = good || frontier_finished(h);
                        return;
                    }
                    if (w == *state.leftmost_entry(*j) && h[*j]) good = true;
                    if (h[*j]) b1 = true;
                    for (std::size_t k = *j + 1; k < n; ++k) b2 = b2 || h[k].has_value();
                });
            });
            const PointType expect = good ? PointType::Good : b1 ? PointType::B1 : b2 ? PointType::B2 : PointType::B3;
            REQUIRE(types.at(u, i));
            CHECK(*types.at(u, i) == expect);
            ++typed;
        }
    }
    CHECK(typed > 50);
}

TEST_CASE("find_doubleb") {
    // No SemiBad point anywhere.
    const std::vector<Point> easy{{-0.5, 5}, {5, -0.5}, {10.5, 5}, {5, 10.5}};
    const auto a = anchor_start(kSquare, easy, 4.0);
    const ConvexInstance inst(kSquare, easy, 4.0, *a);
    const Classification types = classify(propagate(inst.cylinders), inst);
    CHECK(find_doubleb(types, inst).empty());

    // Thin polygon where point 3 is SemiBad on both chains.
    const ConvexPolygon thin({{3.7914742593839499, -0.28252187527231076},
                              {-3.5643413740961827, 0.39683152646096248},
                              {-1.4739743922692381, 0.80436385527848597},
                              {1.353331372913404, 0.8141592933204389}});
    const std::vector<Point> s{{2.279046220080474, -0.99662700260320691},
                               {3.1221136684582413, -0.91098492431259925},
                               {-2.3281709334747118, 0.61444476462620545},
                               {0.019971786299975314, -0.31355394271769099}};
    const double eps = 1.201068579511148;
    const ConvexInstance t(thin, s, eps, *anchor_start(thin, s, eps));
    const Classification tt = classify(propagate(t.cylinders), t);
    const auto areas = find_doubleb(tt, t);
    REQUIRE(areas.size() == 1);
    CHECK(areas[0].points == std::vector<std::size_t>{3});
    bool upper = false, lower = false;
    for (std::size_t i = 0; i < tt.cylinder_count(); ++i)
        if (tt.semibad(3, i)) (t.chain[i] == Chain::Upper ? upper : lower) = true;
    CHECK(upper);
    CHECK(lower);
    // Same answer as the oracle.
    CHECK(decide_convex(thin, s, eps).feasible == oracle_feasible(thin, s, eps));
}

TEST_CASE("alpha and the twice-B modification") {
    // One point per side, all Good: alpha visits them in boundary order.
    const std::vector<Point> s{{-0.5, 5}, {5, 10.5}, {10.5, 5}, {5, -0.5}};
    const double eps = 3.5;
    const auto a = anchor_start(kSquare, s, eps);
    const ConvexInstance inst(kSquare, s, eps, *a);
    const ReachState state = propagate(inst.cylinders);
    const Classification types = classify(state, inst);
    for (const auto& node : state.nodes()) CHECK(types.at(node.point, node.cylinder) == PointType::Good);
    const PolyCurve alpha = build_alpha(state, inst);
    CHECK(alpha == PolyCurve{s[0], s[1], s[2], s[3], s[0]});
    CHECK(decide_frechet(alpha, inst.rho, eps));
    CHECK(modify_for_twiceb(alpha, DoubleBArea{}, Chain::Upper, inst) == alpha);
}

TEST_CASE("decide_convex on the square") {
    // Offset midpoints: the corner (0,10) is 4.5/sqrt(2) from the nearest usable segment.
    const std::vector<Point> s{{-0.5, 5}, {5, -0.5}, {10.5, 5}, {5, 10.5}};
    CHECK_FALSE(decide_convex(kSquare, s, 2.0).feasible);
    CHECK_FALSE(oracle_feasible(kSquare, s, 2.0, 8));
    const ConvexDecision yes = decide_convex(kSquare, s, 3.5);
    REQUIRE(yes.feasible);
    CHECK(oracle_feasible(kSquare, s, 3.5, 8));
    CHECK(is_feasible(*yes.witness, *yes.rho, s, 3.5));
    CHECK_FALSE(decide_convex(kSquare, s, 0.4).feasible);

    const std::vector<Point> corners(kSquare.vertices().begin(), kSquare.vertices().end());
    const ConvexDecision exact = decide_convex(kSquare, corners, 0.0);
    REQUIRE(exact.feasible);
    CHECK(covers(*exact.witness, corners));

    CHECK_FALSE(decide_convex(kSquare, {}, 1.0).feasible);
    CHECK_THROWS_AS(decide_convex(kSquare, s, -1.0), std::invalid_argument);
}

TEST_CASE("minimize_convex") {
    const std::vector<Point> corners(kSquare.vertices().begin(), kSquare.vertices().end());
    CHECK(minimize_convex(kSquare, corners, 1e-6) <= 1e-6);

    const std::vector<Point> offset{{-0.5, -0.5}, {10.5, -0.5}, {10.5, 10.5}, {-0.5, 10.5}};
    CHECK(minimize_convex(kSquare, offset, 1e-6) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-5));

    // Against bisection over the oracle.
    const std::vector<Point> mids{{-0.5, 5}, {5, -0.5}, {10.5, 5}, {5, 10.5}};
    double lo = 0, hi = 20;
    while (hi - lo > 1e-6) {
        const double mid = (lo + hi) / 2;
        (oracle_feasible(kSquare, mids, mid) ? hi : lo) = mid;
    }
    const double e = minimize_convex(kSquare, mids, 1e-6);
    CHECK(e == doctest::Approx(hi).epsilon(1e-5));
    CHECK(e > 0.4);
    CHECK(e == doctest::Approx(4.5 / std::sqrt(2.0)).epsilon(1e-5));
}

TEST_CASE("decide_convex agrees with the oracle on random instances") {
    Rng rng(43);
    int yes = 0;
    for (int t = 0; t < 150; ++t) {
        const ConvexPolygon poly = random_convex_polygon(rng, pick(rng, 3, 6), uniform(rng, 1, 6), uniform(rng, 1, 6));
        const auto s = points_near_boundary(rng, poly, pick(rng, 1, 5), uniform(rng, 0.2, 2));
        const double eps = uniform(rng, 0.3, 3.5);
        const ConvexDecision d = decide_convex(poly, s, eps);
        CHECK(d.feasible == oracle_feasible(poly, s, eps));
        if (d.feasible) {
            ++yes;
            CHECK(is_feasible(*d.witness, *d.rho, s, eps));
        }
    }
    CHECK(yes > 20);
}
