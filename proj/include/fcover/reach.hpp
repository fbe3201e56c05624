#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fcover/frechet.hpp"
#include "fcover/geometry.hpp"

namespace fcover {

/// Per-edge cylinders of a curve and the chord P_i[v] of every point inside them.
/// Points are identified by their index into the point list, so duplicate
/// coordinates are distinct points.
class CylinderDecomposition {
public:
    CylinderDecomposition(PolyCurve curve, std::vector<Point> points, double eps);

    const PolyCurve& curve() const { return curve_; }
    std::span<const Point> points() const { return points_; }
    double eps() const { return eps_; }
    std::size_t cylinder_count() const { return curve_.edge_count(); }
    std::size_t point_count() const { return points_.size(); }

    /// P_i[v] as a parameter interval on edge i, or nothing when v is outside C_i.
    const std::optional<Interval>& chord(std::size_t v, std::size_t i) const { return chords_[i * points_.size() + v]; }
    bool contains(std::size_t i, std::size_t v) const { return chord(v, i).has_value(); }
    /// S_i in index order.
    std::vector<std::size_t> members(std::size_t i) const;

private:
    PolyCurve curve_;
    std::vector<Point> points_;
    double eps_;
    std::vector<std::optional<Interval>> chords_;
};

CylinderDecomposition build_cylinders(const PolyCurve& curve, std::span<const Point> s, double eps);

/// Left(P_i[u]) < Left(P_i[v]). Throws std::invalid_argument unless both are in S_i.
bool before(std::size_t u, std::size_t v, std::size_t i, const CylinderDecomposition& d);
/// Right(P_i[u]) < Left(P_i[v]).
bool entirely_before(std::size_t u, std::size_t v, std::size_t i, const CylinderDecomposition& d);

/// Some t1 in P_i[u], t2 in P_j[v] with t1 <= t2 along the curve such that the
/// subcurve between them is within eps of the segment <u, v>.
bool direct_reach(const CylinderDecomposition& d, std::size_t u, std::size_t i, std::size_t v, std::size_t j);

/// Positions reachable on the curve after walking u -> v, starting from u at
/// parameter `from` on edge i (anywhere in P_i[u] at or after `from`).
Frontier step_frontier(const CylinderDecomposition& d, std::size_t u, std::size_t i, double from, std::size_t v);

/// A reachable (point, cylinder) pair with its earliest position on that edge.
struct ReachNode {
    std::size_t point = 0;
    std::size_t cylinder = 0;
    double position = 0.0;
    bool entry = false;
    std::optional<std::size_t> predecessor;  // index into ReachState::nodes()
};

/// A seed for reachability: point `point` placed on edge `cylinder` at `position`.
struct ReachSeed {
    std::size_t point = 0;
    std::size_t cylinder = 0;
    double position = 0.0;
};

class ReachState {
public:
    std::size_t cylinder_count() const { return sets_.size(); }
    /// R_i in point-index order.
    const std::vector<std::size_t>& set(std::size_t i) const { return sets_[i]; }
    const std::optional<std::size_t>& leftmost_entry(std::size_t i) const { return lambda_[i]; }
    std::optional<std::size_t> node(std::size_t point, std::size_t cylinder) const;
    const std::vector<ReachNode>& nodes() const { return nodes_; }
    std::optional<double> position(std::size_t point, std::size_t cylinder) const;
    bool reachable(std::size_t point) const;
    /// The vertex sequence of a semi-feasible curve ending at the given point.
    PolyCurve witness(std::size_t point, std::size_t cylinder, std::span<const Point> pts) const;

private:
    friend ReachState propagate_from(const CylinderDecomposition&, std::span<const ReachSeed>);
    std::vector<std::vector<std::size_t>> sets_;
    std::vector<std::optional<std::size_t>> lambda_;
    std::vector<ReachNode> nodes_;
    std::vector<std::optional<std::size_t>> index_;  // cylinder * point_count + point -> node
    std::size_t point_count_ = 0;
};

/// Reachability closure from arbitrary seeds, cylinder by cylinder: entry
/// points come from any earlier cylinder, then everything reachable from the
/// leftmost entry point of the cylinder.
ReachState propagate_from(const CylinderDecomposition& d, std::span<const ReachSeed> seeds);

/// Semi-feasible reachability from the curve's start.
ReachState propagate(const CylinderDecomposition& d);

/// `point` at cylinder `i` lets a curve end within eps of the curve's end.
bool can_finish(const CylinderDecomposition& d, const ReachState& r, std::size_t point, std::size_t i);

/// A curve through some of the points lies within eps of the whole curve.
bool decide_subset(const PolyCurve& curve, std::span<const Point> s, double eps);

}  // namespace fcover
