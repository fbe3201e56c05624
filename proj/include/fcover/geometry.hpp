#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcover {

/// Tolerance used by every geometric predicate (on-segment, tangency,
/// coincidence) and by the closed Fréchet decisions.
inline constexpr double kTolerance = 1e-9;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Lexicographic (x, then y) strict order.
inline bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Coincidence within kTolerance.
bool almost_equal(Point a, Point b, double tol = kTolerance);

struct Segment {
    Point a;
    Point b;

    Point at(double t) const { return a + t * (b - a); }
    Point direction() const { return b - a; }
    double length() const { return norm(b - a); }
    bool degenerate() const { return length() <= kTolerance; }
};

struct Ball {
    Point center;
    double radius = 0.0;

    Ball() = default;
    Ball(Point c, double r);
};

/// A polygonal curve. Always holds at least one vertex; consecutive
/// duplicates are kept as given.
class PolyCurve {
public:
    PolyCurve() = default;
    explicit PolyCurve(std::vector<Point> vertices);
    PolyCurve(std::initializer_list<Point> vertices);

    std::span<const Point> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    /// Number of edges; a single-vertex curve has none.
    std::size_t edge_count() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    Segment edge(std::size_t i) const { return {vertices_[i], vertices_[i + 1]}; }
    const Point& front() const { return vertices_.front(); }
    const Point& back() const { return vertices_.back(); }
    bool empty() const { return vertices_.empty(); }

    /// Appends `p` (the ⋄ operation with a single point).
    void push_back(Point p) { vertices_.push_back(p); }
    double length() const;

    friend bool operator==(const PolyCurve&, const PolyCurve&) = default;

private:
    std::vector<Point> vertices_;
};

/// Convex polygon with vertices stored clockwise; the closing edge is implicit.
class ConvexPolygon {
public:
    /// Accepts either orientation. Throws GeometryError unless the vertices
    /// form a strictly convex polygon with at least three vertices.
    explicit ConvexPolygon(std::vector<Point> vertices);

    std::span<const Point> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    /// Edge i runs from vertex i to vertex (i+1) mod n.
    Segment edge(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % vertices_.size()]}; }

    bool contains(Point p, double tol = kTolerance) const;
    bool on_boundary(Point p, double tol = kTolerance) const;
    Point closest_boundary_point(Point p) const;
    double diameter() const;

private:
    std::vector<Point> vertices_;
};

double dist(Point p, Point q);
double point_segment_distance(Point p, const Segment& s);
/// Parameter in [0,1] of the point of `s` closest to `p`.
double closest_parameter(Point p, const Segment& s);
Point closest_point(Point p, const Segment& s);

/// Foot of the perpendicular from `p` onto the supporting line of `s` when it
/// lies on `s`. Throws GeometryError for a degenerate segment.
std::optional<Point> perpendicular_foot(Point p, const Segment& s);

/// Unique intersection point of two segments. Throws GeometryError when the
/// segments overlap collinearly in more than one point.
std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2);

/// Portion of `s` inside the closed ball, possibly a single point.
std::optional<Segment> ball_segment_intersection(const Ball& b, const Segment& s);

Point midpoint(const Segment& s);
Point midpoint(Point a, Point b);

/// a ⋄ b; a shared junction vertex is stored once.
PolyCurve concat(const PolyCurve& a, const PolyCurve& b);

/// Clockwise hull. Throws GeometryError for fewer than three distinct or
/// all-collinear points.
ConvexPolygon convex_hull(std::span<const Point> points);

/// Signed area (positive when counter-clockwise).
double signed_area(std::span<const Point> ring);

}  // namespace fcover
