#include "fcover/geometry.hpp"

#include <algorithm>
#include <limits>

namespace fcover {

bool almost_equal(Point a, Point b, double tol) { return dist(a, b) <= tol; }

Ball::Ball(Point c, double r) : center(c), radius(r) {
    if (!(r >= 0.0)) throw GeometryError("ball radius must be nonnegative");
}

PolyCurve::PolyCurve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw GeometryError("polygonal curve needs at least one vertex");
    for (const auto& p : vertices_)
        if (!is_finite(p)) throw GeometryError("curve vertex is not finite");
}

PolyCurve::PolyCurve(std::initializer_list<Point> vertices)
    : PolyCurve(std::vector<Point>(vertices)) {}

double PolyCurve::length() const {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) total += dist(vertices_[i], vertices_[i + 1]);
    return total;
}

double signed_area(std::span<const Point> ring) {
    double twice = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) twice += cross(ring[i], ring[(i + 1) % ring.size()]);
    return twice / 2.0;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw GeometryError("convex polygon needs at least three vertices");
    for (const auto& p : vertices_)
        if (!is_finite(p)) throw GeometryError("polygon vertex is not finite");
    if (signed_area(vertices_) > 0.0) std::reverse(vertices_.begin(), vertices_.end());
    // Clockwise and strictly convex: every turn is a right turn.
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % n];
        const Point c = vertices_[(i + 2) % n];
        const double turn = cross(b - a, c - b);
        if (turn >= -kTolerance) throw GeometryError("polygon is not strictly convex");
    }
}

bool ConvexPolygon::contains(Point p, double tol) const {
    // Clockwise: interior lies to the right of every edge.
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Segment e = edge(i);
        const double len = e.length();
        if (cross(e.direction(), p - e.a) / len > tol) return false;
    }
    return true;
}

bool ConvexPolygon::on_boundary(Point p, double tol) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (point_segment_distance(p, edge(i)) <= tol) return true;
    return false;
}

Point ConvexPolygon::closest_boundary_point(Point p) const {
    Point best = vertices_.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point q = closest_point(p, edge(i));
        const double d = dist(p, q);
        if (d < best_d) {
            best_d = d;
            best = q;
        }
    }
    return best;
}

double ConvexPolygon::diameter() const {
    double d = 0.0;
    for (const auto& a : vertices_)
        for (const auto& b : vertices_) d = std::max(d, dist(a, b));
    return d;
}

double dist(Point p, Point q) { return norm(p - q); }

double closest_parameter(Point p, const Segment& s) {
    const Point d = s.direction();
    const double len2 = dot(d, d);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
}

Point closest_point(Point p, const Segment& s) { return s.at(closest_parameter(p, s)); }

double point_segment_distance(Point p, const Segment& s) { return dist(p, closest_point(p, s)); }

std::optional<Point> perpendicular_foot(Point p, const Segment& s) {
    if (s.degenerate()) throw GeometryError("perpendicular foot on a degenerate segment");
    const Point d = s.direction();
    const double t = dot(p - s.a, d) / dot(d, d);
    const double slack = kTolerance / s.length();
    if (t < -slack || t > 1.0 + slack) return std::nullopt;
    return s.at(std::clamp(t, 0.0, 1.0));
}

std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2) {
    const Point r = s1.direction();
    const Point q = s2.direction();
    const double denom = cross(r, q);
    const Point w = s2.a - s1.a;
    const double scale = std::max({1.0, norm(r) * norm(q)});

    if (std::abs(denom) <= kTolerance * scale) {
        // Parallel. Only collinear configurations can meet.
        if (std::abs(cross(w, r)) > kTolerance * std::max(1.0, norm(r)) &&
            std::abs(cross(w, q)) > kTolerance * std::max(1.0, norm(q)))
            return std::nullopt;
        if (point_segment_distance(s2.a, s1) > kTolerance && point_segment_distance(s2.b, s1) > kTolerance &&
            point_segment_distance(s1.a, s2) > kTolerance && point_segment_distance(s1.b, s2) > kTolerance)
            return std::nullopt;
        // Collinear and touching: unique only when they share exactly one point.
        std::vector<Point> touching;
        for (Point p : {s1.a, s1.b})
            if (point_segment_distance(p, s2) <= kTolerance) touching.push_back(p);
        for (Point p : {s2.a, s2.b})
            if (point_segment_distance(p, s1) <= kTolerance) touching.push_back(p);
        for (const auto& p : touching)
            if (!almost_equal(p, touching.front())) throw GeometryError("segments overlap collinearly");
        return touching.front();
    }

    const double t = cross(w, q) / denom;
    const double u = cross(w, r) / denom;
    const double st = kTolerance / std::max(norm(r), kTolerance);
    const double su = kTolerance / std::max(norm(q), kTolerance);
    if (t < -st || t > 1.0 + st || u < -su || u > 1.0 + su) return std::nullopt;
    return s1.at(std::clamp(t, 0.0, 1.0));
}

std::optional<Segment> ball_segment_intersection(const Ball& b, const Segment& s) {
    const Point d = s.direction();
    const Point f = s.a - b.center;
    const double a2 = dot(d, d);
    if (a2 == 0.0) {
        if (norm(f) <= b.radius + kTolerance) return Segment{s.a, s.a};
        return std::nullopt;
    }
    // |f + t d|^2 = r^2, solved around the closest parameter for stability.
    const double t0 = -dot(f, d) / a2;
    const double closest2 = dot(f + t0 * d, f + t0 * d);
    const double r = b.radius + kTolerance;
    if (closest2 > r * r) return std::nullopt;
    const double half = std::sqrt(std::max(0.0, b.radius * b.radius - closest2) / a2);
    const double lo = std::max(0.0, t0 - half);
    const double hi = std::min(1.0, t0 + half);
    if (lo > hi) {
        // Within tolerance of an endpoint but just outside.
        const double t = std::clamp(t0, 0.0, 1.0);
        if (dist(s.at(t), b.center) <= r) return Segment{s.at(t), s.at(t)};
        return std::nullopt;
    }
    return Segment{s.at(lo), s.at(hi)};
}

Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }
Point midpoint(const Segment& s) { return midpoint(s.a, s.b); }

PolyCurve concat(const PolyCurve& a, const PolyCurve& b) {
    std::vector<Point> out(a.vertices().begin(), a.vertices().end());
    auto from = b.vertices().begin();
    if (!out.empty() && !b.empty() && almost_equal(out.back(), b.front())) ++from;
    out.insert(out.end(), from, b.vertices().end());
    return PolyCurve(std::move(out));
}

ConvexPolygon convex_hull(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(), [](Point a, Point b) { return almost_equal(a, b); }), pts.end());
    if (pts.size() < 3) throw GeometryError("convex hull needs three distinct points");

    // Monotone chain producing a counter-clockwise hull without collinear vertices.
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    auto turn = [](Point o, Point a, Point b) { return cross(a - o, b - o); };
    for (const auto& p : pts) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= kTolerance) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= kTolerance) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw GeometryError("convex hull of collinear points");
    // Clockwise, still starting at the lexicographically smallest point.
    std::reverse(hull.begin() + 1, hull.end());
    return ConvexPolygon(std::move(hull));
}

}  // namespace fcover
