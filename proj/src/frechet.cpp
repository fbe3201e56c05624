#include "fcover/frechet.hpp"

#include <algorithm>
#include <cmath>

namespace fcover {

namespace {

double radius_for(double eps) { return eps + kTolerance; }

// Cell edge lookup that maps a single-vertex curve onto one degenerate edge.
Segment edge_or_point(const PolyCurve& c, std::size_t i) {
    if (c.size() == 1) return {c[0], c[0]};
    return c.edge(i);
}

std::size_t effective_edges(const PolyCurve& c) { return std::max<std::size_t>(1, c.edge_count()); }

Point vertex_or_point(const PolyCurve& c, std::size_t i) { return c.size() == 1 ? c[0] : c[i]; }

bool reaches_one(const std::optional<Interval>& iv) { return iv && iv->hi >= 1.0 - kTolerance; }
bool touches_zero(const std::optional<Interval>& iv) { return iv && iv->lo <= kTolerance; }

std::optional<Interval> clip_from(const std::optional<Interval>& free, double lower) {
    if (!free) return std::nullopt;
    const double lo = std::max(free->lo, lower);
    if (lo > free->hi + kTolerance) return std::nullopt;
    return Interval{std::min(lo, free->hi), free->hi};
}

// Reachability out of one cell given reachable parts of its left and bottom
// boundaries and the free parts of its right and top boundaries. The free
// region of a cell is convex, so straight moves suffice.
void propagate_cell(const std::optional<Interval>& left, const std::optional<Interval>& bottom,
                    const std::optional<Interval>& right_free, const std::optional<Interval>& top_free,
                    std::optional<Interval>& right, std::optional<Interval>& top) {
    if (bottom)
        right = right_free;
    else if (left)
        right = clip_from(right_free, left->lo);
    else
        right.reset();

    if (left)
        top = top_free;
    else if (bottom)
        top = clip_from(top_free, bottom->lo);
    else
        top.reset();
}

}  // namespace

std::optional<Interval> free_interval(Point p, const Segment& s, double radius) {
    const auto chord = ball_segment_intersection(Ball(p, std::max(0.0, radius - kTolerance)), s);
    if (!chord) return std::nullopt;
    if (s.degenerate()) return Interval{0.0, 1.0};
    // Recover parameters of the chord along s.
    const double lo = closest_parameter(chord->a, s);
    const double hi = closest_parameter(chord->b, s);
    return Interval{std::min(lo, hi), std::max(lo, hi)};
}

FreeSpaceDiagram::FreeSpaceDiagram(const PolyCurve& p, const PolyCurve& q, double eps)
    : p_edges_(effective_edges(p)),
      q_edges_(effective_edges(q)),
      start_free_(dist(p.front(), q.front()) <= radius_for(eps)),
      vertical_((p_edges_ + 1) * q_edges_),
      horizontal_(p_edges_ * (q_edges_ + 1)) {
    const double r = radius_for(eps);
    for (std::size_t i = 0; i <= p_edges_; ++i)
        for (std::size_t j = 0; j < q_edges_; ++j)
            vertical_[i * q_edges_ + j] = free_interval(vertex_or_point(p, i), edge_or_point(q, j), r);
    for (std::size_t i = 0; i < p_edges_; ++i)
        for (std::size_t j = 0; j <= q_edges_; ++j)
            horizontal_[i * (q_edges_ + 1) + j] = free_interval(vertex_or_point(q, j), edge_or_point(p, i), r);
}

bool FreeSpaceDiagram::corner_to_corner() const {
    if (!start_free_) return false;
    const std::size_t n = p_edges_;
    const std::size_t m = q_edges_;
    // reach_v[i][j]: reachable part of vertical(i, j); reach_h[i][j] likewise.
    std::vector<std::optional<Interval>> reach_v((n + 1) * m);
    std::vector<std::optional<Interval>> reach_h(n * (m + 1));
    auto rv = [&](std::size_t i, std::size_t j) -> std::optional<Interval>& { return reach_v[i * m + j]; };
    auto rh = [&](std::size_t i, std::size_t j) -> std::optional<Interval>& { return reach_h[i * (m + 1) + j]; };

    bool open = true;
    for (std::size_t j = 0; j < m && open; ++j) {
        const auto& f = vertical(0, j);
        if (!touches_zero(f)) break;
        rv(0, j) = Interval{0.0, f->hi};
        open = reaches_one(f);
    }
    open = true;
    for (std::size_t i = 0; i < n && open; ++i) {
        const auto& f = horizontal(i, 0);
        if (!touches_zero(f)) break;
        rh(i, 0) = Interval{0.0, f->hi};
        open = reaches_one(f);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            propagate_cell(rv(i, j), rh(i, j), vertical(i + 1, j), horizontal(i, j + 1), rv(i + 1, j), rh(i, j + 1));

    return reaches_one(rv(n, m - 1)) || reaches_one(rh(n - 1, m));
}

Frontier start_frontier(const PolyCurve& target, Point p, double eps) {
    const std::size_t n = effective_edges(target);
    Frontier out(n);
    const double r = radius_for(eps);
    for (std::size_t i = 0; i < n; ++i) {
        const auto f = free_interval(p, edge_or_point(target, i), r);
        if (!touches_zero(f)) break;
        out[i] = Interval{0.0, f->hi};
        if (!reaches_one(f)) break;
    }
    return out;
}

Frontier anywhere_frontier(const PolyCurve& target, Point p, double eps) {
    const std::size_t n = effective_edges(target);
    Frontier out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = free_interval(p, edge_or_point(target, i), radius_for(eps));
    return out;
}

Frontier advance(const PolyCurve& target, const Frontier& at_a, Point a, Point b, double eps) {
    const std::size_t n = effective_edges(target);
    const double r = radius_for(eps);
    const Segment walk{a, b};
    Frontier out(n);
    std::optional<Interval> left;  // reachable part of the vertical line at target vertex i
    for (std::size_t i = 0; i < n; ++i) {
        const auto& bottom = at_a[i];
        if (!left && !bottom) continue;
        const auto right_free = free_interval(vertex_or_point(target, i + 1 < target.size() ? i + 1 : i), walk, r);
        const auto top_free = free_interval(b, edge_or_point(target, i), r);
        std::optional<Interval> right;
        propagate_cell(left, bottom, right_free, top_free, right, out[i]);
        left = right;
    }
    return out;
}

bool frontier_empty(const Frontier& f) {
    return std::none_of(f.begin(), f.end(), [](const auto& iv) { return iv.has_value(); });
}

bool frontier_finished(const Frontier& f) { return !f.empty() && reaches_one(f.back()); }

bool frontier_within(const Frontier& a, const Frontier& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        if (!b[i] || b[i]->lo > a[i]->lo + kTolerance || a[i]->hi > b[i]->hi + kTolerance) return false;
    }
    return true;
}

bool decide_frechet(const PolyCurve& p, const PolyCurve& q, double eps) {
    return FreeSpaceDiagram(p, q, eps).corner_to_corner();
}

bool decide_subcurve_frechet(const PolyCurve& curve, const PolyCurve& pattern, double eps) {
    Frontier f = anywhere_frontier(curve, pattern.front(), eps);
    for (std::size_t j = 0; j + 1 < pattern.size() && !frontier_empty(f); ++j)
        f = advance(curve, f, pattern[j], pattern[j + 1], eps);
    return !frontier_empty(f);
}

bool obs1_bound(Point a, Point b, Point c, Point d) {
    return decide_frechet(PolyCurve{a, c}, PolyCurve{b, d}, std::max(dist(a, b), dist(c, d)));
}

double discrete_frechet(const PolyCurve& p, const PolyCurve& q) {
    const std::size_t n = p.size();
    const std::size_t m = q.size();
    std::vector<double> row(m), prev(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double d = dist(p[i], q[j]);
            if (i == 0 && j == 0)
                row[j] = d;
            else if (i == 0)
                row[j] = std::max(row[j - 1], d);
            else if (j == 0)
                row[j] = std::max(prev[j], d);
            else
                row[j] = std::max(std::min({prev[j], prev[j - 1], row[j - 1]}), d);
        }
        std::swap(row, prev);
    }
    return prev[m - 1];
}

double min_frechet(const PolyCurve& p, const PolyCurve& q, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("min_frechet tolerance must be positive");
    if (decide_frechet(p, q, 0.0)) return 0.0;
    double hi = 0.0;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) hi = std::max(hi, dist(a, b));
    double lo = 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (decide_frechet(p, q, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool verify_schedule(std::span<const std::pair<Point, Point>> schedule, double eps) {
    return std::all_of(schedule.begin(), schedule.end(),
                       [&](const auto& pr) { return dist(pr.first, pr.second) <= radius_for(eps); });
}

PolyCurve densify(const PolyCurve& c, double max_step) {
    if (!(max_step > 0.0)) throw std::invalid_argument("densify step must be positive");
    std::vector<Point> out{c.front()};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Segment e = c.edge(i);
        const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(e.length() / max_step)));
        for (std::size_t k = 1; k <= pieces; ++k) out.push_back(e.at(static_cast<double>(k) / pieces));
    }
    return PolyCurve(std::move(out));
}

}  // namespace fcover
