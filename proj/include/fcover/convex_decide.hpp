#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcover/geometry.hpp"
#include "fcover/reach.hpp"

namespace fcover {

enum class PointType { Good, B1, B2, B3 };
enum class Chain { Upper, Lower };

const char* to_string(PointType t);

struct Anchor {
    std::size_t index = 0;  // x, the leftmost point of S (smallest y on ties)
    Point x;
    Point x_prime;  // closest boundary point to x
};

/// The anchor pair, or nothing when no boundary point is within eps of x.
std::optional<Anchor> anchor_start(const ConvexPolygon& polygon, std::span<const Point> s, double eps);

/// Closed clockwise traversal of the boundary starting and ending at z.
/// Throws GeometryError when z is off the boundary.
PolyCurve boundary_curve(const ConvexPolygon& polygon, Point z);

/// Necessary condition: the hull boundary from the anchor is within eps of
/// the polygon boundary started at some boundary point within eps of the
/// anchor. The projection is tried first, then a fine scan of the boundary
/// inside the anchor's eps disk. Vacuously true for fewer than three or
/// collinear points.
bool hull_precondition(const ConvexPolygon& polygon, std::span<const Point> s, double eps);

/// Everything a convex decision derives from (polygon, S, eps).
struct ConvexInstance {
    ConvexInstance(ConvexPolygon polygon, std::vector<Point> s, double eps, Anchor anchor);

    ConvexPolygon polygon;
    std::vector<Point> points;
    double eps;
    Anchor anchor;
    PolyCurve rho;
    CylinderDecomposition cylinders;
    /// Chain of the polygon edge under each cylinder of rho.
    std::vector<Chain> chain;
};

/// Type of every reachable (point, cylinder) pair; unreachable pairs hold nothing.
class Classification {
public:
    Classification(std::size_t cylinders, std::size_t points)
        : points_(points), types_(cylinders * points) {}

    const std::optional<PointType>& at(std::size_t point, std::size_t cylinder) const {
        return types_[cylinder * points_ + point];
    }
    std::optional<PointType>& at(std::size_t point, std::size_t cylinder) { return types_[cylinder * points_ + point]; }
    std::size_t point_count() const { return points_; }
    std::size_t cylinder_count() const { return points_ == 0 ? 0 : types_.size() / points_; }
    bool semibad(std::size_t point, std::size_t cylinder) const {
        const auto& t = at(point, cylinder);
        return t && *t != PointType::Good;
    }

private:
    std::size_t points_;
    std::vector<std::optional<PointType>> types_;
};

Classification classify(const ReachState& state, const ConvexInstance& inst);

/// A point that is B3 at every cylinder where it is reachable.
std::optional<std::size_t> b3_everywhere(const Classification& types);

/// Good points precede SemiBad points entirely, cylinder by cylinder.
bool good_before_semibad(const Classification& types, const ConvexInstance& inst);

struct DoubleBArea {
    /// (upper cylinder, lower cylinder) pairs, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    /// Twice-TypeB points of the area, sorted by index.
    std::vector<std::size_t> points;
};

/// Connected groups of upper x lower cylinder pairs holding a point that is
/// SemiBad on both chains. Every group found is returned.
std::vector<DoubleBArea> find_doubleb(const Classification& types, const ConvexInstance& inst);

PolyCurve build_alpha(const ReachState& state, const ConvexInstance& inst);

/// Reroutes `alpha` through the area's points near its cylinders on one chain.
PolyCurve modify_for_twiceb(const PolyCurve& alpha, const DoubleBArea& area, Chain chain, const ConvexInstance& inst);

struct ConvexDecision {
    bool feasible = false;
    std::optional<PolyCurve> witness;
    /// Target the witness was checked against (the boundary curve from x').
    std::optional<PolyCurve> rho;
    std::string reason;
};

ConvexDecision decide_convex(const ConvexPolygon& polygon, std::span<const Point> s, double eps);

/// Smallest eps (within tol) for which decide_convex says yes.
double minimize_convex(const ConvexPolygon& polygon, std::span<const Point> s, double tol);

/// Every vertex of q belongs to s and every point of s is a vertex of q.
bool covers(const PolyCurve& q, std::span<const Point> s);

}  // namespace fcover
