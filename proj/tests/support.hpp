#pragma once

// Random instance generators shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fcover/geometry.hpp"
#include "fcover/sat_reduce.hpp"

namespace fcover::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Point random_point(Rng& rng, double r) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }

inline Point random_offset(Rng& rng, double r) {
    const double a = uniform(rng, 0.0, 2 * std::numbers::pi);
    const double m = r * std::sqrt(uniform(rng, 0.0, 1.0));
    return {m * std::cos(a), m * std::sin(a)};
}

inline PolyCurve random_curve(Rng& rng, std::size_t vertices, double r) {
    std::vector<Point> v;
    for (std::size_t i = 0; i < vertices; ++i) v.push_back(random_point(rng, r));
    return PolyCurve(std::move(v));
}

/// Vertices on an ellipse at well separated angles, so the polygon is
/// strictly convex.
inline ConvexPolygon random_convex_polygon(Rng& rng, std::size_t n, double rx, double ry) {
    for (;;) {
        std::vector<double> angles;
        for (std::size_t i = 0; i < n; ++i) angles.push_back(uniform(rng, 0.0, 2 * std::numbers::pi));
        std::sort(angles.begin(), angles.end());
        bool spread = true;
        for (std::size_t i = 0; i < n; ++i) {
            const double next = i + 1 < n ? angles[i + 1] : angles[0] + 2 * std::numbers::pi;
            spread = spread && next - angles[i] > 0.25;
        }
        if (!spread) continue;
        std::vector<Point> v;
        for (double a : angles) v.push_back({rx * std::cos(a), ry * std::sin(a)});
        return ConvexPolygon(std::move(v));
    }
}

inline Point random_boundary_point(Rng& rng, const ConvexPolygon& poly) {
    const Segment e = poly.edge(pick(rng, 0, poly.size() - 1));
    return e.at(uniform(rng, 0.0, 1.0));
}

/// Points scattered around the boundary, within `spread` of it.
inline std::vector<Point> points_near_boundary(Rng& rng, const ConvexPolygon& poly, std::size_t count, double spread) {
    std::vector<Point> s;
    while (s.size() < count) {
        const Point p = random_boundary_point(rng, poly) + random_offset(rng, spread);
        if (std::none_of(s.begin(), s.end(), [&](Point q) { return dist(p, q) < 1e-3; })) s.push_back(p);
    }
    return s;
}

/// Every 3CNF clause over x1..xn: one to three distinct variables, any signs.
inline std::vector<std::vector<Literal>> all_clauses(int n) {
    std::vector<std::vector<Literal>> out;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> vars;
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v)) vars.push_back(v + 1);
        if (vars.size() > 3) continue;
        for (int signs = 0; signs < (1 << vars.size()); ++signs) {
            std::vector<Literal> c;
            for (std::size_t i = 0; i < vars.size(); ++i) c.push_back({vars[i], !(signs & (1 << i))});
            out.push_back(std::move(c));
        }
    }
    return out;
}

inline CnfFormula random_formula(Rng& rng, int n, std::size_t k) {
    const auto clauses = all_clauses(n);
    CnfFormula phi{n, {}};
    for (std::size_t j = 0; j < k; ++j) phi.clauses.push_back(clauses[pick(rng, 0, clauses.size() - 1)]);
    return phi;
}

}  // namespace fcover::testing
